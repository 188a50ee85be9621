#include "blockcycle/continuant.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "blockcycle/checked.hpp"
#include "blockcycle/euclid.hpp"

namespace blockcycle {

namespace {

void check_positive(std::uint64_t n, const char* what) {
    if (n == 0) {
        throw std::invalid_argument(std::string(what) + ": n must be positive");
    }
}

// Extends `word` (whose continuant is `cur`, with `prev` the continuant of the
// word minus its last entry) by every entry that keeps the value <= n.
void extend_words(std::uint64_t n, std::uint64_t prev, std::uint64_t cur, ContinuantWord& word,
                  std::vector<MarkedExpansion>& out) {
    for (std::uint64_t a = 1;; ++a) {
        const std::uint64_t next = a * cur + prev;
        if (next > n) {
            break;
        }
        word.push_back(a);
        if (next == n) {
            if (a >= 2) {
                for (std::size_t s = 0; s + 1 < word.size(); ++s) {
                    out.push_back({s, word});
                }
            }
        } else {
            extend_words(n, cur, next, word, out);
        }
        word.pop_back();
    }
}

template <class Accept>
std::vector<HeilbronnQuadruple> scan_quadruples(std::uint64_t n, Accept accept) {
    std::vector<HeilbronnQuadruple> out;
    // x' > y' >= 1 forces x' >= 2, hence 2x + 1 <= n.
    for (std::uint64_t x = 2; 2 * x + 1 <= n; ++x) {
        for (std::uint64_t y = 1; y < x; ++y) {
            for (std::uint64_t y_prime = 1; y * y_prime < n; ++y_prime) {
                const std::uint64_t rest = n - y * y_prime;
                if (rest <= x * y_prime) {
                    // x' = rest / x shrinks as y' grows; x' > y' fails from here on.
                    break;
                }
                if (rest % x != 0) {
                    continue;
                }
                const std::uint64_t x_prime = rest / x;
                const HeilbronnQuadruple q{x, x_prime, y, y_prime};
                if (accept(q)) {
                    out.push_back(q);
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t sum_x_prime(const std::vector<HeilbronnQuadruple>& quads) {
    std::uint64_t sum = 0;
    for (const auto& q : quads) {
        sum = checked_add(sum, q.x_prime);
    }
    return sum;
}

}  // namespace

std::uint64_t continuant(std::span<const std::uint64_t> word) {
    // Right-to-left: after processing a_j, `cur` = <a_j..a_t> and `prev` = <a_{j+1}..a_t>.
    std::uint64_t prev = 0;
    std::uint64_t cur = 1;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (*it == 0) {
            throw std::domain_error("continuant: entries must be positive");
        }
        const std::uint64_t next = checked_add(checked_mul(*it, cur), prev);
        prev = cur;
        cur = next;
    }
    return cur;
}

std::array<std::uint64_t, 4> continuant_matrix(std::span<const std::uint64_t> word) {
    std::array<std::uint64_t, 4> m{1, 0, 0, 1};
    for (std::uint64_t a : word) {
        if (a == 0) {
            throw std::domain_error("continuant_matrix: entries must be positive");
        }
        // m * [[a, 1], [1, 0]]
        m = {checked_add(checked_mul(m[0], a), m[1]), m[0], checked_add(checked_mul(m[2], a), m[3]),
             m[2]};
    }
    return m;
}

std::vector<MarkedExpansion> heilbronn_expansions(std::uint64_t n) {
    check_positive(n, "heilbronn_expansions");
    std::vector<MarkedExpansion> out;
    ContinuantWord word;
    // First entry a0 >= 2; the empty prefix has continuant 1 and "prev" 0.
    for (std::uint64_t a0 = 2; a0 < n; ++a0) {
        word.push_back(a0);
        extend_words(n, 1, a0, word, out);
        word.pop_back();
    }
    std::sort(out.begin(), out.end());
    return out;
}

HeilbronnQuadruple quadruple_from_expansion(const MarkedExpansion& expansion) {
    const std::span<const std::uint64_t> w(expansion.word);
    const std::size_t s = expansion.split;
    if (w.size() < 2 || s + 1 >= w.size()) {
        throw std::invalid_argument("quadruple_from_expansion: split must satisfy 0 <= s < t");
    }
    return {continuant(w.first(s + 1)), continuant(w.subspan(s + 1)), continuant(w.first(s)),
            continuant(w.subspan(s + 2))};
}

std::vector<HeilbronnQuadruple> heilbronn_quadruples(std::uint64_t n, bool require_second_gcd) {
    check_positive(n, "heilbronn_quadruples");
    return scan_quadruples(n, [require_second_gcd](const HeilbronnQuadruple& q) {
        return std::gcd(q.x, q.y) == 1 && (!require_second_gcd || std::gcd(q.x_prime, q.y_prime) == 1);
    });
}

std::vector<HeilbronnQuadruple> all_quadruples(std::uint64_t n) {
    check_positive(n, "all_quadruples");
    return scan_quadruples(n, [](const HeilbronnQuadruple&) { return true; });
}

int mobius(std::uint64_t d) {
    check_positive(d, "mobius");
    int sign = 1;
    for (std::uint64_t p = 2; p * p <= d; ++p) {
        if (d % p != 0) {
            continue;
        }
        d /= p;
        if (d % p == 0) {
            return 0;
        }
        sign = -sign;
    }
    return d > 1 ? -sign : sign;
}

std::uint64_t big_g(std::uint64_t n) { return sum_x_prime(all_quadruples(n)); }

std::uint64_t big_g_star(std::uint64_t n) { return sum_x_prime(heilbronn_quadruples(n, false)); }

std::int64_t big_g_star_mobius(std::uint64_t n) {
    check_positive(n, "big_g_star_mobius");
    std::int64_t sum = 0;
    for (std::uint64_t d = 1; d <= n; ++d) {
        if (n % d != 0) {
            continue;
        }
        const int mu = mobius(d);
        if (mu != 0) {
            const auto g = static_cast<std::int64_t>(big_g(n / d));
            sum = checked_add(sum, mu > 0 ? g : checked_sub(0, g));
        }
    }
    return sum;
}

HeilbronnIdentity heilbron_identity_check(std::uint64_t n) {
    if (n < 2) {
        throw std::invalid_argument("heilbron_identity_check: n must be >= 2");
    }
    HeilbronnIdentity out;
    out.n = n;
    for (std::uint64_t k = 1; 2 * k <= n; ++k) {
        const std::uint64_t g = std::gcd(n, k);
        const std::uint64_t rs = remainder_sum(n, k);
        out.remainder_sum_total = checked_add(out.remainder_sum_total, rs);
        out.gcd_sum = checked_add(out.gcd_sum, g);
        if (g == 1) {
            out.coprime_remainder_sum = checked_add(out.coprime_remainder_sum, rs);
            ++out.coprime_count;
        }
    }
    out.doubly_coprime_x_prime_sum = sum_x_prime(heilbronn_quadruples(n, true));
    out.g_star = big_g_star(n);
    return out;
}

}  // namespace blockcycle
