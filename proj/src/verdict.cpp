#include "sigprop/verdict.hpp"

namespace sigprop {

const char* status_text(Status s) {
  switch (s) {
    case Status::Holds: return "holds";
    case Status::Violated: return "violated";
    case Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

Verdict make_holds() {
  Verdict v;
  v.status = Status::Holds;
  return v;
}

Verdict make_violated(Witness witness, std::string reason) {
  Verdict v;
  v.status = Status::Violated;
  v.witness = std::move(witness);
  v.reason = std::move(reason);
  return v;
}

Verdict make_inconclusive(Witness witness, std::string reason) {
  Verdict v;
  v.status = Status::Inconclusive;
  v.witness = std::move(witness);
  v.reason = std::move(reason);
  return v;
}

}  // namespace sigprop
