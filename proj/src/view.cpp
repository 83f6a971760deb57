#include "alglab/view.hpp"

#include <algorithm>

#include "alglab/congruence.hpp"

namespace alglab {

PowerSubalgebra::PowerSubalgebra(AlgebraPtr ground, int width, std::vector<uint64_t> elems)
    : ground_(std::move(ground)), width_(width), elems_(std::move(elems)) {
    if (width_ < 1 || width_ > kMaxWidth) throw ValidationError("power view: unsupported width");
    if (ground_->size() >= (1 << kShift)) throw ValidationError("power view: ground algebra too large");
    index_.reserve(elems_.size() * 2);
    for (size_t i = 0; i < elems_.size(); ++i) {
        auto [it, fresh] = index_.emplace(elems_[i], static_cast<int>(i));
        if (!fresh) throw ValidationError("power view: duplicate tuple");
    }
    std::vector<int> u(static_cast<size_t>(width_), ground_->unit());
    unit_ = find(pack(u));
    if (unit_ < 0) throw ValidationError("power view: missing unit tuple");
}

uint64_t PowerSubalgebra::pack(std::span<const int> comps) {
    uint64_t v = 0;
    for (int c : comps) v = (v << kShift) | static_cast<uint64_t>(c);
    return v;
}

int PowerSubalgebra::find(uint64_t packed) const {
    auto it = index_.find(packed);
    return it == index_.end() ? -1 : it->second;
}

int PowerSubalgebra::apply(int op, std::span<const int> args) const {
    int comps[kMaxWidth];
    int gargs[8];
    int k = static_cast<int>(args.size());
    for (int c = 0; c < width_; ++c) {
        for (int i = 0; i < k; ++i) gargs[i] = component(args[static_cast<size_t>(i)], c);
        comps[c] = ground_->apply(op, std::span<const int>(gargs, static_cast<size_t>(k)));
    }
    int r = find(pack(std::span<const int>(comps, static_cast<size_t>(width_))));
    if (r < 0) throw ValidationError("power view: element list not closed under operations");
    return r;
}

PowerSubalgebra relation_view(AlgebraPtr ground, const Congruence& theta) {
    std::vector<uint64_t> elems;
    int n = ground->size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (theta.same(a, b)) elems.push_back(PowerSubalgebra::pack2(a, b));
    // lexicographic (a,b) order == ascending packed order
    return PowerSubalgebra(ground, 2, std::move(elems));
}

}  // namespace alglab
