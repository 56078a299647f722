/* Finite field F_q, q = p^e, as F_p[T]/(m(T)) for a monic irreducible m.
 *
 * Elements are encoded as integers in [0,q): the class of sum c_i T^i is
 * encoded as sum c_i p^i.  The defining polynomial defaults to the
 * lexicographically smallest monic irreducible of degree e (smallest
 * encoded value of the non-leading coefficient vector), so field
 * construction is reproducible.  For small q a multiplication table is
 * precomputed; all arithmetic is exact.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cycdiff {

class Fq {
public:
    using Elem = long long;

    Fq(long long p, int e);
    Fq(long long p, int e, std::vector<long long> modulus);

    long long p() const { return p_; }
    int e() const { return e_; }
    long long q() const { return q_; }
    const std::vector<long long>& modulus() const { return modulus_; }

    Elem zero() const { return 0; }
    Elem one() const { return e_ > 0 ? 1 : 1; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, long long n) const;

    /* Embedding of the prime field (reduces mod p). */
    Elem from_int(long long c) const;

    std::vector<long long> to_vector(Elem a) const;
    Elem from_vector(const std::vector<long long>& v) const;

    long long mult_order(Elem a) const;

    /* Smallest element (in encoded order) of exact multiplicative order n.
     * Requires n | q-1. */
    Elem zeta(long long n) const;

    std::string to_string(Elem a) const;

    bool operator==(const Fq& other) const {
        return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
    }

private:
    long long p_;
    int e_;
    long long q_;
    std::vector<long long> modulus_;  // monic, degree e, coeff of T^i at index i

    std::vector<int32_t> mul_table_;  // q*q entries when q <= kTableLimit
    std::vector<int32_t> inv_table_;

    static constexpr long long kTableLimit = 512;

    Elem mul_raw(Elem a, Elem b) const;
    Elem inv_raw(Elem a) const;
    void build_tables();
};

/* Smallest power q = p^e with n | q-1 and q > lower_bound. */
long long smallest_field_size(long long p, long long n, long long lower_bound, int* e_out);

}  // namespace cycdiff
