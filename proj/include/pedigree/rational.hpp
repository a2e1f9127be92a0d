#ifndef PEDIGREE_RATIONAL_HPP
#define PEDIGREE_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pedigree {

/// Exact fraction in lowest terms with positive denominator.
class Rational {
 public:
  constexpr Rational(std::int64_t num = 0, std::int64_t den = 1) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const auto g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }
  constexpr double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  friend constexpr bool operator==(const Rational&, const Rational&) = default;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace pedigree

#endif  // PEDIGREE_RATIONAL_HPP
