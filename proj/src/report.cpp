#include "flagk/report.hpp"

#include <sstream>

namespace flagk {

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  os << "suite " << suite;
  if (!params.is_null() && !params.empty()) os << " " << params.dump();
  os << "\n";
  for (const auto& c : checks) {
    os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name;
    os << " (" << c.ms << " ms)";
    if (!c.pass && !c.detail.is_null()) os << "\n         " << c.detail.dump();
    os << "\n";
  }
  os << (pass() ? "OK" : "FAILED") << "\n";
  return os.str();
}

}  // namespace flagk
