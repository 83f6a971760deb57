#pragma once

// Deterministic reports: canonical JSON rendering of domain values, a stable
// digest of the inputs, and a plain-text view of the same document.

#include <ostream>
#include <span>
#include <string>

#include "json.hpp"

#include "alglab/algebra.hpp"
#include "alglab/congruence.hpp"

namespace alglab {

using report_json = nlohmann::ordered_json;

// Order-sensitive FNV-1a over the parts; stable across runs and platforms.
std::string inputs_digest(std::span<const std::string> parts);

// Sorted element-name list.
report_json members_json(const NormalSubobject& s);

// Partition blocks in canonical block order, members as names.
report_json partition_json(const FiniteAlgebra& a, const Congruence& c);

// JSON document, or an indented key/value text view with `text`.
void emit_report(const report_json& doc, bool text, std::ostream& out);

}  // namespace alglab
