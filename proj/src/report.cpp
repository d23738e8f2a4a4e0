#include "posdiff/report.hpp"

#include <algorithm>

namespace posdiff {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::certified: return "certified";
    case Verdict::probabilistic: return "probabilistic";
    case Verdict::fail: return "fail";
  }
  return "unknown";
}

bool witness_less(const Witness& a, const Witness& b) {
  if (a.order != b.order) return a.order < b.order;
  if (a.condition != b.condition) return a.condition < b.condition;
  return std::lexicographical_compare(a.points.begin(), a.points.end(), b.points.begin(),
                                      b.points.end(),
                                      [](const Vec& x, const Vec& y) { return vec_less(x, y); });
}

void append_witnesses(DiffReport& report, std::vector<Witness> batch) {
  std::sort(batch.begin(), batch.end(), witness_less);
  batch.erase(std::unique(batch.begin(), batch.end()), batch.end());
  for (auto& w : batch) {
    if (report.witnesses.size() >= kMaxWitnesses) break;
    report.witnesses.push_back(std::move(w));
  }
}

Json rat_json(const Rat& q) { return q.get_str(); }

Json vec_json(std::span<const Rat> v) {
  Json arr = Json::array();
  for (const auto& q : v) arr.push_back(rat_json(q));
  return arr;
}

Json to_json(const Witness& w) {
  Json points = Json::array();
  for (const auto& p : w.points) points.push_back(vec_json(p));
  return Json{{"condition", w.condition}, {"order", w.order}, {"points", points}, {"value", vec_json(w.value)}};
}

Json to_json(const DiffReport& report) {
  Json witnesses = Json::array();
  for (const auto& w : report.witnesses) witnesses.push_back(to_json(w));
  Json orders = Json::array();
  for (const auto& o : report.per_order) {
    orders.push_back(Json{{"order", o.order}, {"verdict", to_string(o.verdict)}});
  }
  Json out{{"verdict", to_string(report.verdict)},
           {"witnesses", witnesses},
           {"samples", report.samples_used},
           {"seed", report.seed}};
  if (!report.per_order.empty()) out["orders"] = orders;
  return out;
}

}  // namespace posdiff
