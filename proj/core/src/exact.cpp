#include "hexafern/exact.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace hexafern {

namespace {

void require_non_negative(int n, const char* what) {
  if (n < 0) {
    throw std::domain_error(std::string(what) + ": negative argument " + std::to_string(n));
  }
}

// Grow-only prefix table. Values are copied out under the lock; the table is
// never shrunk, so a value once computed never changes.
class Table {
 public:
  template <typename Extend>
  BigInt get(int n, Extend extend) {
    std::lock_guard<std::mutex> lock(mutex_);
    while (static_cast<int>(values_.size()) <= n) {
      extend(values_);
    }
    return values_[static_cast<std::size_t>(n)];
  }

 private:
  std::mutex mutex_;
  std::vector<BigInt> values_;
};

Table& factorial_table() {
  static Table table;
  return table;
}

Table& hyperfactorial_table() {
  static Table table;
  return table;
}

Table& skipping_table() {
  static Table table;
  return table;
}

}  // namespace

std::string to_string(const BigInt& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  Rational canonical = value;
  canonical.canonicalize();
  if (canonical.get_den() == 1) {
    return canonical.get_num().get_str();
  }
  return canonical.get_num().get_str() + "/" + canonical.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  auto valid_integer = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den)) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
  BigInt n(num[0] == '+' ? num.substr(1) : num);
  BigInt d(den[0] == '+' ? den.substr(1) : den);
  if (d == 0) {
    throw std::invalid_argument("zero denominator: '" + text + "'");
  }
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Rational ratio(long p, long q) {
  if (q == 0) throw std::domain_error("ratio with zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

BigInt factorial(int n) {
  require_non_negative(n, "factorial");
  return factorial_table().get(n, [](std::vector<BigInt>& v) {
    if (v.empty()) {
      v.emplace_back(1);
    } else {
      v.push_back(v.back() * static_cast<unsigned long>(v.size()));
    }
  });
}

BigInt hyperfactorial(int n) {
  require_non_negative(n, "hyperfactorial");
  return hyperfactorial_table().get(n, [](std::vector<BigInt>& v) {
    if (v.empty()) {
      v.emplace_back(1);
    } else {
      // H(k) = H(k-1) * (k-1)!
      const int k = static_cast<int>(v.size());
      v.push_back(v.back() * factorial(k - 1));
    }
  });
}

BigInt skipping_hyperfactorial(int n) {
  require_non_negative(n, "skipping_hyperfactorial");
  return skipping_table().get(n, [](std::vector<BigInt>& v) {
    const int k = static_cast<int>(v.size());
    if (k < 2) {
      v.emplace_back(1);
    } else {
      // H2(k) = H2(k-2) * (k-2)!
      v.push_back(v[static_cast<std::size_t>(k - 2)] * factorial(k - 2));
    }
  });
}

Rational pochhammer(const Rational& x, int n) {
  Rational result = 1;
  if (n > 0) {
    for (int i = 0; i < n; ++i) {
      result *= x + i;
    }
  } else if (n < 0) {
    Rational denominator = 1;
    for (int i = 1; i <= -n; ++i) {
      denominator *= x - i;
    }
    if (denominator == 0) {
      throw std::domain_error("pochhammer: zero factor in the negative-index denominator");
    }
    result /= denominator;
  }
  return result;
}

BigInt binomial(int n, int r) {
  if (r < 0) return 0;
  BigInt numerator = 1;
  for (int i = 0; i < r; ++i) {
    numerator *= n - i;
  }
  return numerator / factorial(r);
}

Rational power_of_two(int e) {
  BigInt p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(e < 0 ? -e : e));
  return e < 0 ? Rational(BigInt(1), p) : Rational(p);
}

}  // namespace hexafern
