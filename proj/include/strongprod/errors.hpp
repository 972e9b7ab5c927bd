#ifndef STRONGPROD_ERRORS_HPP
#define STRONGPROD_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace strongprod {

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset)
    {
    }
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Precondition of an operation is not met by its arguments.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Size limit (bit-set width, graph6 bound, product cap, generator range).
class capacity_error : public std::length_error {
public:
    using std::length_error::length_error;
};

// A construction or check that a proven statement guarantees has failed.
// Seeing one of these means either a bug here or a counterexample.
class theorem_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace strongprod

#endif // STRONGPROD_ERRORS_HPP
