#pragma once

// gtest value printers for library types.

#include <ostream>

#include "wittlab/lambda.hpp"
#include "wittlab/necklace.hpp"
#include "wittlab/qsymm.hpp"
#include "wittlab/symm.hpp"
#include "wittlab/witt.hpp"

namespace wittlab {

inline void PrintTo(const RingElem& x, std::ostream* os) { *os << x.to_string(); }
inline void PrintTo(const Poly& x, std::ostream* os) { *os << x.to_string(); }
inline void PrintTo(const WittVec& x, std::ostream* os) { *os << x.to_string(); }
inline void PrintTo(const Series& x, std::ostream* os) { *os << x.to_string(); }
inline void PrintTo(const SymFn& x, std::ostream* os) { *os << x.to_string(); }
inline void PrintTo(const SymTensor& x, std::ostream* os) { *os << x.to_string(); }
inline void PrintTo(const WordTensor& x, std::ostream* os) { *os << x.to_string(); }
inline void PrintTo(const CyclicSet& x, std::ostream* os) { *os << x.to_string(); }
inline void PrintTo(const NecklaceVec& x, std::ostream* os) { *os << x.to_string(); }
template <int Tag>
void PrintTo(const WordFn<Tag>& x, std::ostream* os) {
  *os << x.to_string();
}

}  // namespace wittlab
