#include "report.hpp"

namespace gammalab::report {

Json to_json(Subset s) {
  Json out = Json::array();
  for (int p : s.points()) out.push_back(p);
  return out;
}

Json to_json(const Witness& w) {
  Json sets = Json::object();
  for (const auto& [name, s] : w.sets) sets[name] = to_json(s);
  Json points = Json::object();
  for (const auto& [name, p] : w.points) points[name] = p;
  return Json{{"sets", sets}, {"points", points}};
}

Json to_json(const LabConfig& c) {
  return Json{{"closed_def", to_string(c.closed_def)},
              {"open_dir", to_string(c.open_dir)},
              {"subspace_policy", c.policy == SubspacePolicy::Union ? "union" : "flag-ambiguous"}};
}

Json to_json(const InstanceRecipe& r) {
  Json spaces = Json::array();
  for (const FiniteSpace& s : r.spaces) {
    Json opens = Json::array();
    for (Subset u : s.opens()) opens.push_back(to_json(u));
    spaces.push_back(Json{{"points", s.points()}, {"opens", opens}});
  }
  Json ops = Json::array();
  for (const Operation& op : r.ops) {
    Json table = Json::array();
    for (std::size_t i = 0; i < op.space().opens().size(); ++i) {
      table.push_back(Json::array({to_json(op.space().opens()[i]), to_json(op.at(i))}));
    }
    ops.push_back(Json{{"kind", to_string(op.kind())}, {"table", table}});
  }
  Json out{{"shape", to_string(r.shape)}, {"spaces", spaces}, {"ops", ops}, {"maps", r.maps}};
  if (r.shape == Shape::SpaceSubset) out["subset"] = to_json(r.subset);
  return out;
}

Json to_json(const Verdict& v) {
  Json out{{"type", "verdict"},        {"theorem", v.theorem}, {"index", v.index},
           {"outcome", to_string(v.outcome)}, {"vacuous", v.vacuous}};
  if (v.outcome == Outcome::Counterexample) out["witness"] = to_json(v.witness);
  if (!v.unmet.empty()) out["unmet"] = v.unmet;
  out["config"] = to_json(v.config);
  out["instance"] = to_json(v.recipe);
  return out;
}

Json to_json(const Summary& s) {
  Json out{{"type", "summary"},
           {"theorem", s.theorem},
           {"instances", s.instances},
           {"holds", s.holds},
           {"vacuous", s.vacuous},
           {"counterexamples", s.counterexamples},
           {"skipped", s.skipped},
           {"not_applicable", s.not_applicable}};
  Json by = Json::object();
  for (const auto& [name, count] : s.skipped_by) by[name] = count;
  out["skipped_by"] = by;
  if (s.first_counterexample) out["first_counterexample"] = s.first_counterexample->index;
  return out;
}

}  // namespace gammalab::report
