#include "hermsq/rational.hpp"

#include <ostream>

namespace hermsq {

std::string Rat::str() const {
    std::string s = q_.get_num().get_str();
    if (q_.get_den() != 1) {
        s += '/';
        s += q_.get_den().get_str();
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rat& x) {
    return os << x.str();
}

}  // namespace hermsq
