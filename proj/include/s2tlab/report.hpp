#ifndef S2TLAB_REPORT_HPP
#define S2TLAB_REPORT_HPP

#include <string>

#include <json.hpp>

namespace s2tlab {

using json = nlohmann::json;

enum class Outcome { Pass, Fail, HypothesisNotMet };

std::string to_string(Outcome o);

/// Result of one executable check.  A failing report always carries a
/// witness that can be replayed independently (see replay_witness).
struct CheckReport {
  std::string check_name;
  std::string instance_label;
  Outcome outcome = Outcome::Pass;
  json witness;  // null unless there is something to replay or exhibit
  json details;  // auxiliary facts (class sizes, flags, ...)
  double elapsed_ms = 0.0;

  bool passed() const { return outcome == Outcome::Pass; }
  bool failed() const { return outcome == Outcome::Fail; }
};

/// One structured text record per report, stable field names
/// (check_name, instance, passed, witness, elapsed_ms); used for golden
/// files.  Witness and details are embedded as compact JSON.
std::string to_text_record(const CheckReport& r);

/// The same facts as a JSON object (one line in machine output).
json to_json_record(const CheckReport& r);

/// Rebuild a report from its JSON record.
CheckReport report_from_json(const json& j);

class Perm;

json perm_to_json(const Perm& p);
Perm perm_from_json(const json& j);

/// Re-runs the single comparison a failure witness names, from the data in
/// the witness alone.  Returns true iff the recorded violation reproduces.
/// Understood kinds:
///   perms_differ      {lhs, rhs}            expected equal, are not
///   fixes_point       {perm, point}         perm was expected fixed-point-free
///   missing_from_set  {element, set}        element expected in set, is not
///   unexpected_in_set {element, set}        element expected absent, is present
///   non_conjugate_pair{a, b, group}         no g in group with a^g = b
///   noncommuting_pair {a, b}                ab != ba
///   pair_solution_count {x,y,z,t,group}     # of g with g(x)=z, g(y)=t is != 1
///   law_violation     {law, triple, add, mul}  near-field law fails at triple
/// Permutations are image lists, sets are lists of image lists.
bool replay_witness(const json& witness);

} // namespace s2tlab

#endif
