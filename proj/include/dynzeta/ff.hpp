#pragma once
// Prime and extension fields F_q, q = p^N < 2^31.
//
// An element is stored as the integer sum c_i p^i of its coordinates in the
// polynomial basis 1, t, ..., t^(N-1), where t is a root of the modulus.
// Enumeration order is integer order of that encoding.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "dynzeta/bounds.hpp"

namespace dynzeta {

using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  Field(std::uint32_t p, unsigned N);

  std::uint32_t p() const { return p_; }
  unsigned degree() const { return n_; }
  std::uint32_t size() const { return q_; }
  bool is_prime_field() const { return n_ == 1; }
  // Monic modulus, coefficients c_0..c_N.
  const std::vector<std::uint32_t>& modulus() const { return mod_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long v) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  Elem frob(Elem a) const;      // a^p
  Elem frob_inv(Elem a) const;  // a^(q/p)
  Elem frob_pow(Elem a, unsigned j) const;

  bool in_prime_field(Elem a) const { return a < p_; }
  std::vector<std::uint32_t> digits(Elem a) const;
  Elem from_digits(const std::vector<std::uint32_t>& d) const;
  std::string to_string(Elem a) const;

  // Multiplicative generator (found by scanning in enumeration order).
  Elem generator() const { return gen_; }

 private:
  Elem mul_school(Elem a, Elem b) const;

  std::uint32_t p_;
  unsigned n_;
  std::uint32_t q_;
  std::vector<std::uint32_t> mod_;
  std::vector<std::uint32_t> ppow_;  // p^0..p^(N-1)
  std::vector<std::uint32_t> log_;   // log tables for small extensions
  std::vector<std::uint32_t> exp_;
  Elem gen_ = 1;
};

// Deterministic: the modulus is the first monic irreducible of degree N when
// the integer sum c_i p^i of its lower coefficients is scanned upward.
FieldPtr make_field(std::uint32_t p, unsigned N);

bool is_prime_u64(std::uint64_t n);

// All p^N elements in canonical order.
std::vector<Elem> enumerate_field(const Field& F, std::uint64_t bound = enumeration_bound());

// Embedding of a subfield F_{p^k} into F_{p^N}, k | N: the generator t of
// the subfield goes to the first root of its modulus in enumeration order.
class Embedding {
 public:
  Embedding(FieldPtr sub, FieldPtr ext);
  Elem operator()(Elem a) const;
  const FieldPtr& sub() const { return sub_; }
  const FieldPtr& ext() const { return ext_; }

 private:
  FieldPtr sub_, ext_;
  std::vector<Elem> tpow_;  // images of t^i
};

}  // namespace dynzeta
