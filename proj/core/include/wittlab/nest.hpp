#pragma once

#include <string>
#include <vector>

namespace wittlab {

// A finite divisor-closed set of positive integers containing 1.
class Nest {
 public:
  Nest() : idx_{1} {}
  // Validates divisor closure; throws std::invalid_argument otherwise.
  explicit Nest(std::vector<long> indices);

  static Nest range(long n);
  static Nest divisors_of(long n);
  // {1, p, ..., p^(len-1)}: the indices of length-len p-adic vectors.
  static Nest ppow(long p, int len);
  // Smallest nest containing every generator.
  static Nest closure(const std::vector<long>& generators);
  // Parse "1,2,3,4"; a single number n means {1..n}.
  static Nest parse(const std::string& text);

  const std::vector<long>& indices() const { return idx_; }
  std::size_t size() const { return idx_.size(); }
  long max() const { return idx_.back(); }
  bool contains(long n) const;
  // Position of n in indices(), or -1.
  long position(long n) const;

  // Smallest nest containing m*n for every n here.
  Nest dilated(long m) const;
  // {n : m*n in this nest}; may be empty.
  std::vector<long> divided(long m) const;

  bool operator==(const Nest& o) const { return idx_ == o.idx_; }
  bool operator!=(const Nest& o) const { return idx_ != o.idx_; }
  std::string to_string() const;

 private:
  std::vector<long> idx_;
};

}  // namespace wittlab
