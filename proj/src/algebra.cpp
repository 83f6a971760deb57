#include "alglab/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace alglab {

namespace {

std::string tuple_str(const FiniteAlgebra& a, std::span<const int> args) {
    std::string s = "(";
    for (size_t i = 0; i < args.size(); ++i) {
        if (i) s += ",";
        s += a.element_name(args[i]);
    }
    return s + ")";
}

// Odometer over arity digits in base n; calls f(flat_index, digits).
template <class F>
void for_each_tuple(int n, int arity, F&& f) {
    std::vector<int> digits(static_cast<size_t>(arity), 0);
    size_t total = 1;
    for (int i = 0; i < arity; ++i) total *= static_cast<size_t>(n);
    for (size_t flat = 0; flat < total; ++flat) {
        f(flat, digits);
        for (int d = arity - 1; d >= 0; --d) {
            if (++digits[static_cast<size_t>(d)] < n) break;
            digits[static_cast<size_t>(d)] = 0;
        }
    }
}

// Same, but f returns false to stop.
template <class F>
void for_each_tuple_until(int n, int arity, F&& f) {
    std::vector<int> digits(static_cast<size_t>(arity), 0);
    size_t total = 1;
    for (int i = 0; i < arity; ++i) total *= static_cast<size_t>(n);
    for (size_t flat = 0; flat < total; ++flat) {
        if (!f(flat, digits)) return;
        for (int d = arity - 1; d >= 0; --d) {
            if (++digits[static_cast<size_t>(d)] < n) break;
            digits[static_cast<size_t>(d)] = 0;
        }
    }
}

bool group_laws_hold(int n, int unit, const std::vector<int>& mul, const std::vector<int>& inv) {
    auto m = [&](int a, int b) { return mul[static_cast<size_t>(a) * n + b]; };
    for (int a = 0; a < n; ++a) {
        if (m(unit, a) != a || m(a, unit) != a) return false;
        if (m(a, inv[static_cast<size_t>(a)]) != unit) return false;
        if (m(inv[static_cast<size_t>(a)], a) != unit) return false;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (m(m(a, b), c) != m(a, m(b, c))) return false;
    return true;
}

constexpr int kGroupCheckLimit = 64;

}  // namespace

// ---------------------------------------------------------------------------
// Signature

Signature::Signature(std::vector<OpDecl> ops, std::string unit_symbol) : ops_(std::move(ops)) {
    std::set<std::string> seen;
    for (size_t i = 0; i < ops_.size(); ++i) {
        const auto& o = ops_[i];
        if (o.symbol.empty()) throw ValidationError("signature: empty operation symbol");
        if (!seen.insert(o.symbol).second)
            throw ValidationError("signature: duplicate operation symbol '" + o.symbol + "'");
        if (o.arity < 0) throw ValidationError("signature: negative arity for '" + o.symbol + "'");
        if (o.arity == 0) {
            if (unit_op_ >= 0)
                throw ValidationError("signature: more than one constant symbol ('" +
                                      ops_[static_cast<size_t>(unit_op_)].symbol + "', '" + o.symbol + "')");
            unit_op_ = static_cast<int>(i);
        }
        // Variable-shaped symbols would be shadowed by the term grammar.
        if (o.symbol.size() >= 2 && o.symbol[0] == 'x' &&
            std::all_of(o.symbol.begin() + 1, o.symbol.end(), [](char c) { return std::isdigit(c); }))
            throw ValidationError("signature: symbol '" + o.symbol + "' collides with variable syntax");
    }
    if (unit_op_ < 0) throw ValidationError("signature: missing constant (unit) symbol");
    if (ops_[static_cast<size_t>(unit_op_)].symbol != unit_symbol)
        throw ValidationError("signature: unit symbol mismatch: constant is '" +
                              ops_[static_cast<size_t>(unit_op_)].symbol + "', expected '" + unit_symbol + "'");
}

int Signature::find(const std::string& symbol) const {
    for (size_t i = 0; i < ops_.size(); ++i)
        if (ops_[i].symbol == symbol) return static_cast<int>(i);
    return -1;
}

int Signature::max_arity() const {
    int m = 0;
    for (const auto& o : ops_) m = std::max(m, o.arity);
    return m;
}

bool Signature::operator==(const Signature& o) const {
    if (ops_.size() != o.ops_.size() || unit_op_ != o.unit_op_) return false;
    for (size_t i = 0; i < ops_.size(); ++i)
        if (ops_[i].symbol != o.ops_[i].symbol || ops_[i].arity != o.ops_[i].arity) return false;
    return true;
}

// ---------------------------------------------------------------------------
// FiniteAlgebra

FiniteAlgebra::FiniteAlgebra(std::string name, Signature sig, std::vector<std::string> element_names,
                             int unit, std::vector<std::vector<int>> tables,
                             std::optional<GroupOps> group_hint)
    : name_(std::move(name)),
      sig_(std::move(sig)),
      n_(static_cast<int>(element_names.size())),
      names_(std::move(element_names)),
      unit_(unit),
      tables_(std::move(tables)) {
    if (n_ <= 0) throw ValidationError("algebra '" + name_ + "': empty carrier");
    if (unit_ < 0 || unit_ >= n_) throw ValidationError("algebra '" + name_ + "': unit index out of range");
    std::set<std::string> seen;
    for (const auto& s : names_) {
        if (s.empty()) throw ValidationError("algebra '" + name_ + "': empty element name");
        if (!seen.insert(s).second)
            throw ValidationError("algebra '" + name_ + "': duplicate element name '" + s + "'");
    }
    if (static_cast<int>(tables_.size()) != sig_.op_count())
        throw ValidationError("algebra '" + name_ + "': expected " + std::to_string(sig_.op_count()) +
                              " tables, got " + std::to_string(tables_.size()));
    for (int op = 0; op < sig_.op_count(); ++op) {
        size_t want = 1;
        for (int i = 0; i < sig_.op(op).arity; ++i) want *= static_cast<size_t>(n_);
        const auto& t = tables_[static_cast<size_t>(op)];
        if (t.size() != want)
            throw ValidationError("algebra '" + name_ + "': table for '" + sig_.op(op).symbol +
                                  "' has " + std::to_string(t.size()) + " entries, want " + std::to_string(want));
        for (int v : t)
            if (v < 0 || v >= n_)
                throw ValidationError("algebra '" + name_ + "': table for '" + sig_.op(op).symbol +
                                      "' has out-of-range value");
    }
    if (tables_[static_cast<size_t>(sig_.unit_op())][0] != unit_)
        throw ValidationError("algebra '" + name_ + "': unit table entry disagrees with unit index");

    if (group_hint) {
        group_ = group_hint;
    } else if (n_ <= kGroupCheckLimit) {
        int mul = sig_.find("mul"), inv = sig_.find("inv");
        if (mul >= 0 && inv >= 0 && sig_.op(mul).arity == 2 && sig_.op(inv).arity == 1 &&
            group_laws_hold(n_, unit_, tables_[static_cast<size_t>(mul)], tables_[static_cast<size_t>(inv)]))
            group_ = GroupOps{mul, inv};
    }
}

int FiniteAlgebra::element_by_name(const std::string& name) const {
    for (int i = 0; i < n_; ++i)
        if (names_[static_cast<size_t>(i)] == name) return i;
    throw ValidationError("algebra '" + name_ + "': no element named '" + name + "'");
}

int FiniteAlgebra::apply(int op, std::span<const int> args) const {
    const auto& t = tables_[static_cast<size_t>(op)];
    size_t idx = 0;
    for (int a : args) idx = idx * static_cast<size_t>(n_) + static_cast<size_t>(a);
    return t[idx];
}

AlgebraPtr make_algebra(std::string name, Signature sig, std::vector<std::string> element_names,
                        int unit, std::vector<std::vector<int>> tables,
                        std::optional<GroupOps> group_hint) {
    return std::make_shared<const FiniteAlgebra>(std::move(name), std::move(sig), std::move(element_names),
                                                 unit, std::move(tables), group_hint);
}

// ---------------------------------------------------------------------------
// Terms

Term Term::variable(int index) {
    Term t;
    t.var = index;
    return t;
}

Term Term::apply(std::string symbol, std::vector<Term> args) {
    Term t;
    t.symbol = std::move(symbol);
    t.args = std::move(args);
    return t;
}

int Term::var_count() const {
    if (is_var()) return var + 1;
    int m = 0;
    for (const auto& a : args) m = std::max(m, a.var_count());
    return m;
}

int Term::height() const {
    if (is_var() || args.empty()) return 0;
    int m = 0;
    for (const auto& a : args) m = std::max(m, a.height());
    return m + 1;
}

bool Term::operator==(const Term& o) const {
    if (var != o.var) return false;
    if (is_var()) return true;
    return symbol == o.symbol && args == o.args;
}

namespace {

struct Parser {
    const std::string& src;
    const Signature* sig;  // null: accept any symbol/arity as written
    size_t pos = 0;

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw ValidationError("syntax error at offset " + std::to_string(pos + 1) + ": " + msg);
    }
    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
            ++pos;
        if (pos == start) fail("expected identifier");
        return src.substr(start, pos - start);
    }
    Term term() {
        std::string id = ident();
        skip_ws();
        if (pos < src.size() && src[pos] == '(') {
            ++pos;
            int op = sig ? sig->find(id) : -1;
            if (sig && op < 0) fail("unknown operation '" + id + "'");
            std::vector<Term> args;
            args.push_back(term());
            skip_ws();
            while (pos < src.size() && src[pos] == ',') {
                ++pos;
                args.push_back(term());
                skip_ws();
            }
            if (pos >= src.size() || src[pos] != ')') fail("expected ',' or ')'");
            ++pos;
            if (sig && static_cast<int>(args.size()) != sig->op(op).arity)
                fail("operation '" + id + "' takes " + std::to_string(sig->op(op).arity) +
                     " arguments, got " + std::to_string(args.size()));
            return Term::apply(id, std::move(args));
        }
        if (id.size() >= 2 && id[0] == 'x' &&
            std::all_of(id.begin() + 1, id.end(), [](char c) { return std::isdigit(c); }))
            return Term::variable(std::stoi(id.substr(1)));
        if (sig) {
            int op = sig->find(id);
            if (op < 0) fail("unknown symbol '" + id + "'");
            if (sig->op(op).arity != 0)
                fail("operation '" + id + "' takes " + std::to_string(sig->op(op).arity) +
                     " arguments, got 0");
        }
        return Term::apply(id);
    }
};

}  // namespace

Term parse_term(const std::string& src, const Signature& sig) {
    Parser p{src, &sig};
    Term t = p.term();
    p.skip_ws();
    if (p.pos != src.size()) p.fail("trailing input");
    return t;
}

Term parse_term(const std::string& src) {
    Parser p{src, nullptr};
    Term t = p.term();
    p.skip_ws();
    if (p.pos != src.size()) p.fail("trailing input");
    return t;
}

std::string print_term(const Term& t) {
    if (t.is_var()) return "x" + std::to_string(t.var);
    if (t.args.empty()) return t.symbol;
    std::string s = t.symbol + "(";
    for (size_t i = 0; i < t.args.size(); ++i) {
        if (i) s += ",";
        s += print_term(t.args[i]);
    }
    return s + ")";
}

void validate_term(const Term& t, const Signature& sig) {
    if (t.is_var()) return;
    int op = sig.find(t.symbol);
    if (op < 0) throw ValidationError("term: unknown operation '" + t.symbol + "'");
    if (static_cast<int>(t.args.size()) != sig.op(op).arity)
        throw ValidationError("term: operation '" + t.symbol + "' takes " +
                              std::to_string(sig.op(op).arity) + " arguments, got " +
                              std::to_string(t.args.size()));
    for (const auto& a : t.args) validate_term(a, sig);
}

int eval_term(const Term& t, const FiniteAlgebra& a, std::span<const int> env) {
    if (t.is_var()) {
        if (t.var >= static_cast<int>(env.size()))
            throw ValidationError("eval: unbound variable x" + std::to_string(t.var));
        return env[static_cast<size_t>(t.var)];
    }
    int op = a.signature().find(t.symbol);
    if (op < 0) throw ValidationError("eval: unknown operation '" + t.symbol + "'");
    if (static_cast<int>(t.args.size()) != a.signature().op(op).arity)
        throw ValidationError("eval: arity mismatch for '" + t.symbol + "'");
    std::vector<int> vals;
    vals.reserve(t.args.size());
    for (const auto& arg : t.args) vals.push_back(eval_term(arg, a, env));
    return a.apply(op, vals);
}

CompiledTerm CompiledTerm::compile(const Term& t, const Signature& sig) {
    validate_term(t, sig);
    CompiledTerm ct;
    ct.var_count = t.var_count();
    int depth = 0;
    auto emit = [&](auto&& self, const Term& node) -> void {
        if (node.is_var()) {
            ct.code.push_back({-1, node.var});
            ++depth;
            ct.stack_need = std::max(ct.stack_need, depth);
            return;
        }
        for (const auto& a : node.args) self(self, a);
        int op = sig.find(node.symbol);
        ct.code.push_back({op, -1});
        depth -= static_cast<int>(node.args.size());
        ++depth;
        ct.stack_need = std::max(ct.stack_need, depth);
    };
    emit(emit, t);
    return ct;
}

int CompiledTerm::eval(const FiniteAlgebra& a, std::span<const int> env) const {
    int stack[32];
    int sp = 0;
    for (const auto& ins : code) {
        if (ins.var >= 0) {
            stack[sp++] = env[static_cast<size_t>(ins.var)];
        } else {
            int k = a.signature().op(ins.op).arity;
            sp -= k;
            stack[sp] = a.apply(ins.op, std::span<const int>(stack + sp, static_cast<size_t>(k)));
            ++sp;
        }
    }
    return stack[0];
}

// ---------------------------------------------------------------------------
// Homomorphisms

bool Homomorphism::is_surjective() const {
    std::vector<char> hit(static_cast<size_t>(codomain->size()), 0);
    for (int v : map) hit[static_cast<size_t>(v)] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool Homomorphism::is_injective() const {
    std::vector<char> hit(static_cast<size_t>(codomain->size()), 0);
    for (int v : map) {
        if (hit[static_cast<size_t>(v)]) return false;
        hit[static_cast<size_t>(v)] = 1;
    }
    return true;
}

Homomorphism hom_check(AlgebraPtr domain, AlgebraPtr codomain, std::vector<int> map) {
    if (!(domain->signature() == codomain->signature()))
        throw ValidationError("hom_check: signature mismatch between '" + domain->name() + "' and '" +
                              codomain->name() + "'");
    if (static_cast<int>(map.size()) != domain->size())
        throw ValidationError("hom_check: map has " + std::to_string(map.size()) + " entries, want " +
                              std::to_string(domain->size()));
    for (int v : map)
        if (v < 0 || v >= codomain->size()) throw ValidationError("hom_check: map value out of range");
    if (map[static_cast<size_t>(domain->unit())] != codomain->unit())
        throw ValidationError("hom_check: unit not preserved");

    const auto& sig = domain->signature();
    for (int op = 0; op < sig.op_count(); ++op) {
        int k = sig.op(op).arity;
        if (k == 0) continue;
        bool bad = false;
        std::string where;
        for_each_tuple_until(domain->size(), k, [&](size_t, const std::vector<int>& args) {
            std::vector<int> mapped(args.size());
            for (size_t i = 0; i < args.size(); ++i) mapped[i] = map[static_cast<size_t>(args[i])];
            int lhs = map[static_cast<size_t>(domain->apply(op, args))];
            int rhs = codomain->apply(op, mapped);
            if (lhs != rhs) {
                bad = true;
                where = sig.op(op).symbol + tuple_str(*domain, args);
                return false;
            }
            return true;
        });
        if (bad)
            throw ValidationError("hom_check: map does not commute with " + where);
    }
    return Homomorphism{std::move(domain), std::move(codomain), std::move(map)};
}

Homomorphism identity_hom(AlgebraPtr a) {
    std::vector<int> m(static_cast<size_t>(a->size()));
    for (int i = 0; i < a->size(); ++i) m[static_cast<size_t>(i)] = i;
    return Homomorphism{a, a, std::move(m)};
}

Homomorphism compose(const Homomorphism& g, const Homomorphism& f) {
    if (f.codomain.get() != g.domain.get())
        throw ValidationError("compose: middle objects differ");
    std::vector<int> m(f.map.size());
    for (size_t i = 0; i < f.map.size(); ++i) m[i] = g.map[static_cast<size_t>(f.map[i])];
    return Homomorphism{f.domain, g.codomain, std::move(m)};
}

// ---------------------------------------------------------------------------
// Constructions

ProductResult product(AlgebraPtr a, AlgebraPtr b) {
    if (!(a->signature() == b->signature()))
        throw ValidationError("product: signature mismatch between '" + a->name() + "' and '" + b->name() + "'");
    int na = a->size(), nb = b->size();
    if (static_cast<long long>(na) * nb > 4096)
        throw BoundError("product: carrier of size " + std::to_string(static_cast<long long>(na) * nb) +
                         " exceeds the table limit");
    int n = na * nb;
    std::vector<std::string> names(static_cast<size_t>(n));
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            names[static_cast<size_t>(i * nb + j)] = "(" + a->element_name(i) + "," + b->element_name(j) + ")";
    const auto& sig = a->signature();
    std::vector<std::vector<int>> tables;
    for (int op = 0; op < sig.op_count(); ++op) {
        int k = sig.op(op).arity;
        size_t total = 1;
        for (int i = 0; i < k; ++i) total *= static_cast<size_t>(n);
        std::vector<int> t(total);
        std::vector<int> ca(static_cast<size_t>(k)), cb(static_cast<size_t>(k));
        for_each_tuple(n, k, [&](size_t flat, const std::vector<int>& args) {
            for (int i = 0; i < k; ++i) {
                ca[static_cast<size_t>(i)] = args[static_cast<size_t>(i)] / nb;
                cb[static_cast<size_t>(i)] = args[static_cast<size_t>(i)] % nb;
            }
            t[flat] = a->apply(op, ca) * nb + b->apply(op, cb);
        });
        tables.push_back(std::move(t));
    }
    std::optional<GroupOps> hint;
    if (a->group_ops() && b->group_ops()) hint = a->group_ops();
    auto alg = make_algebra(a->name() + "x" + b->name(), sig, std::move(names),
                            a->unit() * nb + b->unit(), std::move(tables), hint);
    std::vector<int> p0(static_cast<size_t>(n)), p1(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        p0[static_cast<size_t>(i)] = i / nb;
        p1[static_cast<size_t>(i)] = i % nb;
    }
    return ProductResult{alg, Homomorphism{alg, a, std::move(p0)}, Homomorphism{alg, b, std::move(p1)}};
}

Homomorphism pair_into_product(const ProductResult& p, const Homomorphism& f, const Homomorphism& g) {
    if (f.domain.get() != g.domain.get()) throw ValidationError("pairing: domains differ");
    if (f.codomain.get() != p.proj0.codomain.get() || g.codomain.get() != p.proj1.codomain.get())
        throw ValidationError("pairing: codomains do not match the product factors");
    int nb = p.proj1.codomain->size();
    std::vector<int> m(f.map.size());
    for (size_t i = 0; i < f.map.size(); ++i) m[i] = f.map[i] * nb + g.map[i];
    return Homomorphism{f.domain, p.algebra, std::move(m)};
}

std::vector<int> subalgebra_generate(const FiniteAlgebra& a, std::span<const int> gens) {
    std::vector<char> in(static_cast<size_t>(a.size()), 0);
    std::vector<int> members;
    auto add = [&](int e) {
        if (!in[static_cast<size_t>(e)]) {
            in[static_cast<size_t>(e)] = 1;
            members.push_back(e);
        }
    };
    add(a.unit());
    for (int g : gens) {
        if (g < 0 || g >= a.size()) throw ValidationError("subalgebra_generate: generator out of range");
        add(g);
    }
    const auto& sig = a.signature();
    // Saturate: combine every new element with all current members in every
    // position of every operation.
    size_t next = 0;
    std::vector<int> args;
    while (next < members.size()) {
        size_t frontier_end = members.size();
        for (; next < frontier_end; ++next) {
            int x = members[next];
            for (int op = 0; op < sig.op_count(); ++op) {
                int k = sig.op(op).arity;
                if (k == 0) continue;
                if (k == 1) {
                    add(a.apply1(op, x));
                    continue;
                }
                // Mixed tuples over current members with x in at least one
                // slot; tuples involving later members are formed when those
                // members are processed themselves.
                args.assign(static_cast<size_t>(k), 0);
                size_t snap = members.size();
                size_t count = 1;
                for (int i = 0; i < k; ++i) count *= snap;
                for (size_t flat = 0; flat < count; ++flat) {
                    size_t rest = flat;
                    bool uses_x = false;
                    for (int i = k - 1; i >= 0; --i) {
                        size_t d = rest % snap;
                        rest /= snap;
                        args[static_cast<size_t>(i)] = members[d];
                        if (members[d] == x) uses_x = true;
                    }
                    if (!uses_x) continue;
                    add(a.apply(op, args));
                }
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

SubalgebraResult subalgebra(AlgebraPtr a, std::span<const int> members) {
    std::vector<int> local(members.begin(), members.end());
    std::sort(local.begin(), local.end());
    local.erase(std::unique(local.begin(), local.end()), local.end());
    std::vector<int> back(static_cast<size_t>(a->size()), -1);
    for (size_t i = 0; i < local.size(); ++i) back[static_cast<size_t>(local[i])] = static_cast<int>(i);
    if (back[static_cast<size_t>(a->unit())] < 0)
        throw ValidationError("subalgebra: member set misses the unit");
    const auto& sig = a->signature();
    int n = static_cast<int>(local.size());
    std::vector<std::vector<int>> tables;
    std::vector<int> args;
    for (int op = 0; op < sig.op_count(); ++op) {
        int k = sig.op(op).arity;
        size_t total = 1;
        for (int i = 0; i < k; ++i) total *= static_cast<size_t>(n);
        std::vector<int> t(total);
        args.assign(static_cast<size_t>(k), 0);
        for_each_tuple(n, k, [&](size_t flat, const std::vector<int>& digits) {
            for (int i = 0; i < k; ++i) args[static_cast<size_t>(i)] = local[static_cast<size_t>(digits[static_cast<size_t>(i)])];
            int v = a->apply(op, args);
            int lv = back[static_cast<size_t>(v)];
            if (lv < 0)
                throw ValidationError("subalgebra: member set not closed under '" + sig.op(op).symbol + "'");
            t[flat] = lv;
        });
        tables.push_back(std::move(t));
    }
    std::vector<std::string> names(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) names[static_cast<size_t>(i)] = a->element_name(local[static_cast<size_t>(i)]);
    std::optional<GroupOps> hint;
    if (a->group_ops()) hint = a->group_ops();
    auto alg = make_algebra(a->name() + "<", sig, std::move(names),
                            back[static_cast<size_t>(a->unit())], std::move(tables), hint);
    Homomorphism incl{alg, a, local};
    return SubalgebraResult{alg, std::move(local), std::move(incl)};
}

bool satisfies(const FiniteAlgebra& a, std::span<const Identity> ids) {
    return !find_violation(a, ids).has_value();
}

std::optional<Violation> find_violation(const FiniteAlgebra& a, std::span<const Identity> ids) {
    for (size_t i = 0; i < ids.size(); ++i) {
        const auto& id = ids[i];
        auto lhs = CompiledTerm::compile(id.lhs, a.signature());
        auto rhs = CompiledTerm::compile(id.rhs, a.signature());
        int r = id.var_count();
        std::optional<Violation> found;
        for_each_tuple_until(a.size(), r, [&](size_t, const std::vector<int>& env) {
            if (lhs.eval(a, env) != rhs.eval(a, env)) {
                found = Violation{static_cast<int>(i), env};
                return false;
            }
            return true;
        });
        if (found) return found;
    }
    return std::nullopt;
}

}  // namespace alglab
