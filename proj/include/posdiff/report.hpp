#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "posdiff/rat.hpp"

namespace posdiff {

using Json = nlohmann::ordered_json;

enum class Verdict {
  pass,           // every check held and the checks are exhaustive
  certified,      // holds by a symbolic certificate
  probabilistic,  // every sampled check held; not a proof
  fail,           // a counterexample was found; see the witnesses
};

std::string_view to_string(Verdict v);

struct Witness {
  std::string condition;  // which check failed, e.g. "mixed" or "(i)"
  unsigned order = 0;     // difference order r
  std::vector<Vec> points;  // base point followed by the increments
  Vec value;

  friend bool operator==(const Witness&, const Witness&) = default;
};

// Canonical witness order: by order, then lexicographically by points.
bool witness_less(const Witness& a, const Witness& b);

struct OrderVerdict {
  unsigned order = 0;
  Verdict verdict = Verdict::pass;
};

/// Outcome of a sampled or symbolic check. A failing report carries at
/// least one witness; probe witnesses (deterministic points) precede random
/// ones and each group is sorted canonically.
struct DiffReport {
  Verdict verdict = Verdict::pass;
  std::vector<Witness> witnesses;
  std::size_t samples_used = 0;
  std::uint64_t seed = 0;
  std::vector<OrderVerdict> per_order;

  bool passed() const { return verdict != Verdict::fail; }
};

inline constexpr std::size_t kMaxWitnesses = 8;

// Sorts and truncates a batch of witnesses, then appends it to the report.
void append_witnesses(DiffReport& report, std::vector<Witness> batch);

Json rat_json(const Rat& q);
Json vec_json(std::span<const Rat> v);
Json to_json(const Witness& w);
Json to_json(const DiffReport& report);

}  // namespace posdiff
