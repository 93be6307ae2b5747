#ifndef FINSEMI_SRC_VERIFY_INTERNAL_HPP_
#define FINSEMI_SRC_VERIFY_INTERNAL_HPP_

#include <string>
#include <vector>

#include "finsemi/verify.hpp"

namespace finsemi {
namespace detail {

struct CheckerEntry {
  const char* id;
  const char* summary;
  TheoremReport (*fn)(const VerifyContext&);
};

//! The full registry, in spec order (verify() looks up by id; verify_all
//! sorts by id).
const std::vector<CheckerEntry>& checker_registry();

}  // namespace detail
}  // namespace finsemi

#endif  // FINSEMI_SRC_VERIFY_INTERNAL_HPP_
