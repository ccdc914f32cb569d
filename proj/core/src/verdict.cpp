#include "twoadic/verdict.hpp"

namespace twoadic {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::hypothesis_not_met: return "hypothesis_not_met";
    case Verdict::paper_exception: return "paper_exception";
    case Verdict::counterexample: return "counterexample";
  }
  return "unknown";
}

}  // namespace twoadic
