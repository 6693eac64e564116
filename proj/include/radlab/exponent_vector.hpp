#pragma once

#include <cstdint>
#include <map>

namespace radlab {

/// Exact positive integer represented as a prime -> exponent map. Products
/// like G_c overflow fixed-width integers already near c ~ 100, so every
/// identity in this project is compared entrywise on this type instead.
class ExponentVector {
public:
    using Map = std::map<std::uint64_t, std::uint64_t>;

    void add(std::uint64_t prime, std::uint64_t exponent);
    void add_all(const ExponentVector& other);

    const Map& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    /// sum of exponent * log(prime), compensated.
    double log_value() const;

    /// The represented integer; throws std::overflow_error beyond uint64.
    std::uint64_t value() const;

    friend bool operator==(const ExponentVector&,
                           const ExponentVector&) = default;

private:
    Map entries_;
};

}  // namespace radlab
