#include "s2tlab/report.hpp"

#include <sstream>

#include "s2tlab/group.hpp"
#include "s2tlab/perm.hpp"

namespace s2tlab {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::HypothesisNotMet: return "hypothesis-not-met";
  }
  return "?";
}

static Outcome outcome_from_string(const std::string& s) {
  if (s == "pass") return Outcome::Pass;
  if (s == "fail") return Outcome::Fail;
  if (s == "hypothesis-not-met") return Outcome::HypothesisNotMet;
  throw std::invalid_argument("unknown outcome: " + s);
}

json perm_to_json(const Perm& p) { return json(p.images()); }

Perm perm_from_json(const json& j) {
  return Perm(j.get<std::vector<int>>());
}

std::string to_text_record(const CheckReport& r) {
  std::ostringstream os;
  os << "check_name=" << r.check_name
     << " instance=" << r.instance_label
     << " passed=" << (r.passed() ? "true" : "false")
     << " outcome=" << to_string(r.outcome)
     << " witness=" << (r.witness.is_null() ? "-" : r.witness.dump())
     << " details=" << (r.details.is_null() ? "-" : r.details.dump())
     << " elapsed_ms=" << r.elapsed_ms;
  return os.str();
}

json to_json_record(const CheckReport& r) {
  return json{{"check_name", r.check_name},
              {"instance", r.instance_label},
              {"passed", r.passed()},
              {"outcome", to_string(r.outcome)},
              {"witness", r.witness},
              {"details", r.details},
              {"elapsed_ms", r.elapsed_ms}};
}

CheckReport report_from_json(const json& j) {
  CheckReport r;
  r.check_name = j.at("check_name").get<std::string>();
  r.instance_label = j.at("instance").get<std::string>();
  r.outcome = outcome_from_string(j.at("outcome").get<std::string>());
  r.witness = j.value("witness", json());
  r.details = j.value("details", json());
  r.elapsed_ms = j.value("elapsed_ms", 0.0);
  return r;
}

static PermSet permset_from_json(const json& j) {
  PermSet s;
  for (const auto& e : j)
    s.insert(perm_from_json(e));
  return s;
}

bool replay_witness(const json& w) {
  const std::string kind = w.at("kind").get<std::string>();

  if (kind == "perms_differ") {
    return perm_from_json(w.at("lhs")) != perm_from_json(w.at("rhs"));
  }
  if (kind == "fixes_point") {
    Perm p = perm_from_json(w.at("perm"));
    int x = w.at("point").get<int>();
    return p[x] == x;
  }
  if (kind == "missing_from_set") {
    Perm e = perm_from_json(w.at("element"));
    return permset_from_json(w.at("set")).count(e) == 0;
  }
  if (kind == "unexpected_in_set") {
    Perm e = perm_from_json(w.at("element"));
    return permset_from_json(w.at("set")).count(e) != 0;
  }
  if (kind == "non_conjugate_pair") {
    Perm a = perm_from_json(w.at("a"));
    Perm b = perm_from_json(w.at("b"));
    for (const auto& gj : w.at("group"))
      if (conjugate(a, perm_from_json(gj)) == b)
        return false;
    return true;
  }
  if (kind == "noncommuting_pair") {
    Perm a = perm_from_json(w.at("a"));
    Perm b = perm_from_json(w.at("b"));
    return compose(a, b) != compose(b, a);
  }
  if (kind == "pair_solution_count") {
    int x = w.at("x").get<int>(), y = w.at("y").get<int>();
    int z = w.at("z").get<int>(), t = w.at("t").get<int>();
    long count = 0;
    for (const auto& gj : w.at("group")) {
      Perm g = perm_from_json(gj);
      if (g[x] == z && g[y] == t)
        ++count;
    }
    return count != 1;
  }
  if (kind == "distinct_involutions_in_stabilizer") {
    Perm a = perm_from_json(w.at("a"));
    Perm b = perm_from_json(w.at("b"));
    PermSet stab = permset_from_json(w.at("stabilizer"));
    return a != b && element_order(a) == 2 && element_order(b) == 2 &&
           stab.count(a) && stab.count(b);
  }
  if (kind == "malnormality_violation") {
    Perm z = perm_from_json(w.at("z"));
    PermSet stab = permset_from_json(w.at("stabilizer"));
    bool z_in_h = stab.count(z) != 0;
    bool meet_nontrivial = false;
    for (const Perm& h : stab) {
      if (h.is_identity())
        continue;
      if (stab.count(conjugate(h, inverse(z)))) {
        meet_nontrivial = true;
        break;
      }
    }
    return meet_nontrivial != z_in_h;
  }
  if (kind == "law_violation") {
    const auto add = w.at("add").get<std::vector<std::vector<int>>>();
    const auto mul = w.at("mul").get<std::vector<std::vector<int>>>();
    const auto tr = w.at("triple").get<std::vector<int>>();
    const std::string law = w.at("law").get<std::string>();
    const int a = tr.at(0), b = tr.size() > 1 ? tr.at(1) : 0,
              c = tr.size() > 2 ? tr.at(2) : 0;
    if (law == "add_associative")
      return add[add[a][b]][c] != add[a][add[b][c]];
    if (law == "add_commutative")
      return add[a][b] != add[b][a];
    if (law == "add_identity")
      return add[0][a] != a || add[a][0] != a;
    if (law == "add_inverse") {
      for (int v = 0; v < static_cast<int>(add.size()); ++v)
        if (add[a][v] == 0)
          return false;
      return true;
    }
    if (law == "mul_associative")
      return mul[mul[a][b]][c] != mul[a][mul[b][c]];
    if (law == "mul_identity")
      return mul[1][a] != a || mul[a][1] != a;
    if (law == "mul_closed_nonzero")
      return a != 0 && b != 0 && mul[a][b] == 0;
    if (law == "mul_inverse") {
      for (int v = 1; v < static_cast<int>(mul.size()); ++v)
        if (mul[a][v] == 1)
          return false;
      return true;
    }
    if (law == "zero_absorbs")
      return mul[0][a] != 0 || mul[a][0] != 0;
    if (law == "right_distributive")
      return mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]];
    if (law == "left_distributive")
      return mul[c][add[a][b]] != add[mul[c][a]][mul[c][b]];
    throw std::invalid_argument("unknown law in witness: " + law);
  }
  throw std::invalid_argument("unknown witness kind: " + kind);
}

} // namespace s2tlab
