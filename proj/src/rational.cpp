#include "lekr/rational.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace lekr {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

// Memoized C(n,k). mpz_bin_uiui does the heavy lifting; the table only
// exists so repeated lookups (weights, size formulas, report rendering)
// stay cheap and thread-safe.
class BinomialTable {
 public:
  BigInt get(long n, long k) {
    if (k < 0 || k > n) return BigInt(0);
    if (k == 0 || k == n) return BigInt(1);
    if (k > n - k) k = n - k;
    const std::uint64_t key =
        (static_cast<std::uint64_t>(n) << 32) | static_cast<std::uint64_t>(k);
    {
      std::shared_lock lock(mutex_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    BigInt value;
    mpz_bin_uiui(value.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    std::unique_lock lock(mutex_);
    return cache_.emplace(key, std::move(value)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::unordered_map<std::uint64_t, BigInt> cache_;
};

BinomialTable& table() {
  static BinomialTable t;
  return t;
}

}  // namespace

BigInt binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
  return table().get(n, k);
}

Rational weight(long n, long k, long i) {
  if (i < 0 || i > k || k > n)
    throw std::invalid_argument("weight: requires 0 <= i <= k <= n");
  return make_rational(BigInt(1), binomial(n - i, k - i));
}

std::string rational_to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string decimal_string(const Rational& r, int sig) {
  if (sig < 1) throw std::invalid_argument("decimal_string: sig must be >= 1");
  if (r == 0) return "0";
  const bool negative = r < 0;
  BigInt p = abs(r.get_num());
  const BigInt& q = r.get_den();

  // Estimate the decimal exponent from digit counts, then scale so the
  // integer quotient carries sig+2..sig+3 digits; the exact remainder
  // settles ties.
  const long e_est = static_cast<long>(p.get_str().size()) -
                     static_cast<long>(q.get_str().size());
  const long shift = sig - e_est + 2;
  BigInt num = p, den = q, pow10;
  if (shift >= 0) {
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(shift));
    num *= pow10;
  } else {
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
    den *= pow10;
  }
  BigInt quot, rem;
  mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
              den.get_mpz_t());

  std::string digits = quot.get_str();
  long e10 = static_cast<long>(digits.size()) - 1 - shift;

  // Round the surplus digits away, half to even.
  const long surplus = static_cast<long>(digits.size()) - sig;
  BigInt tenm, half;
  mpz_ui_pow_ui(tenm.get_mpz_t(), 10, static_cast<unsigned long>(surplus));
  half = tenm / 2;
  BigInt head = quot / tenm;
  BigInt tail = quot % tenm;
  bool round_up;
  if (tail > half)
    round_up = true;
  else if (tail < half)
    round_up = false;
  else if (rem != 0)
    round_up = true;
  else
    round_up = mpz_odd_p(head.get_mpz_t()) != 0;
  if (round_up) head += 1;

  std::string d = head.get_str();
  if (static_cast<int>(d.size()) > sig) {  // 999.. rolled over to 1000..
    d.pop_back();
    e10 += 1;
  }

  std::string out;
  if (negative) out += '-';
  if (e10 >= -4 && e10 < sig) {
    if (e10 >= 0) {
      out += d.substr(0, e10 + 1);
      if (e10 + 1 < sig) {
        out += '.';
        out += d.substr(e10 + 1);
      }
    } else {
      out += "0.";
      out.append(static_cast<std::size_t>(-e10 - 1), '0');
      out += d;
    }
  } else {
    out += d[0];
    out += '.';
    out += d.substr(1);
    out += 'e';
    out += (e10 < 0 ? '-' : '+');
    long ae = e10 < 0 ? -e10 : e10;
    std::string es = std::to_string(ae);
    if (es.size() < 2) es = "0" + es;
    out += es;
  }
  return out;
}

std::string rational_report(const Rational& r) {
  return rational_to_string(r) + " (" + decimal_string(r) + ")";
}

}  // namespace lekr
