#include "glnq/partition.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "glnq/error.hpp"

namespace glnq {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) require(p > 0, ErrorKind::InvalidInput, "partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    if (parts_.empty()) return Partition();
    for (int j = 1; j <= parts_.front(); ++j) {
        int count = 0;
        for (int p : parts_)
            if (p >= j) ++count;
        c.push_back(count);
    }
    return Partition(std::move(c));
}

std::map<int, int> Partition::multiplicities() const {
    std::map<int, int> m;
    for (int p : parts_) ++m[p];
    return m;
}

int Partition::multiplicity(int part) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

std::vector<int> Partition::partial_sums() const {
    std::vector<int> s(parts_.size());
    std::partial_sum(parts_.begin(), parts_.end(), s.begin());
    return s;
}

Partition Partition::scale(int d) const {
    std::vector<int> p = parts_;
    for (int& x : p) x *= d;
    return Partition(std::move(p));
}

bool Partition::distinct_parts() const {
    return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

bool Partition::is_hook() const {
    return parts_.size() <= 1 || parts_[1] == 1;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
}

Partition hook(int n, int r) {
    require(n >= 1 && r >= 0 && r < n, ErrorKind::RangeError, "hook needs 0 <= r < n");
    std::vector<int> p{n - r};
    p.insert(p.end(), static_cast<std::size_t>(r), 1);
    return Partition(std::move(p));
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        try {
            parts.push_back(std::stoi(token));
        } catch (const std::exception&) {
            fail(ErrorKind::InvalidInput, "bad partition '" + text + "'");
        }
        token.clear();
    };
    for (char c : text) {
        if (c == '[' || c == ']' || c == '(' || c == ')' || c == ' ') continue;
        if (c == ',') {
            flush();
            continue;
        }
        if (c < '0' || c > '9') fail(ErrorKind::InvalidInput, "bad partition '" + text + "'");
        token.push_back(c);
    }
    flush();
    return Partition(std::move(parts));
}

Int z_of(const Partition& mu) {
    Int z = 1;
    for (auto [part, mult] : mu.multiplicities()) z *= pow_int(part, static_cast<unsigned>(mult)) * factorial(mult);
    return z;
}

namespace {

struct MnKey {
    std::vector<int> lambda;
    std::vector<int> mu;
    auto operator<=>(const MnKey&) const = default;
};

std::mutex mn_mutex;
std::map<MnKey, long>& mn_memo() {
    static std::map<MnKey, long> memo;
    return memo;
}

// lambda given as weakly decreasing parts (zeros stripped), mu as the remaining cycle lengths.
long mn_rec(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t pos) {
    if (pos == mu.size()) return lambda.empty() ? 1 : 0;
    MnKey key{lambda, std::vector<int>(mu.begin() + static_cast<long>(pos), mu.end())};
    {
        std::lock_guard lock(mn_mutex);
        auto it = mn_memo().find(key);
        if (it != mn_memo().end()) return it->second;
    }
    const int m = mu[pos];
    const int len = static_cast<int>(lambda.size());
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);
    std::set<int> beta_set(beta.begin(), beta.end());

    long total = 0;
    for (int i = 0; i < len; ++i) {
        int target = beta[i] - m;
        if (target < 0 || beta_set.count(target)) continue;
        int between = 0;
        for (int b : beta)
            if (b > target && b < beta[i]) ++between;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.begin(), nb.end(), std::greater<>());
        std::vector<int> next;
        for (int j = 0; j < len; ++j) {
            int part = nb[j] - (len - 1 - j);
            if (part > 0) next.push_back(part);
        }
        long sub = mn_rec(next, mu, pos + 1);
        total += (between % 2 == 0) ? sub : -sub;
    }
    std::lock_guard lock(mn_mutex);
    mn_memo().emplace(std::move(key), total);
    return total;
}

}  // namespace

long mn_character(const Partition& lambda, const Partition& mu) {
    require(lambda.size() == mu.size(), ErrorKind::SizeMismatch,
            "character " + lambda.to_string() + " on class " + mu.to_string());
    return mn_rec(lambda.parts(), mu.parts(), 0);
}

long hook_char_on_ncycle(int n, const Partition& lambda) {
    require(lambda.size() == n && n >= 1, ErrorKind::SizeMismatch, "partition size must equal n");
    if (!lambda.is_hook()) return 0;
    int r = lambda.length() - 1;
    return (r % 2 == 0) ? 1 : -1;
}

long char_on_near_ncycle(int n, const Partition& lambda) {
    require(n >= 3, ErrorKind::RangeError, "near n-cycle values need n >= 3");
    require(lambda.size() == n, ErrorKind::SizeMismatch, "partition size must equal n");
    if (lambda.length() == 1) return 1;
    if (lambda.length() == n) return (n % 2 == 0) ? 1 : -1;
    // (n - r, 2, 1^{r-2}) with n - r >= 2
    const auto& p = lambda.parts();
    if (p.size() >= 2 && p[1] == 2 && p[0] >= 2) {
        for (std::size_t i = 2; i < p.size(); ++i)
            if (p[i] != 1) return 0;
        int r = n - p[0];
        return (r % 2 == 1) ? 1 : -1;
    }
    return 0;
}

Int hook_char_explicit(int n, int r, const Partition& mu) {
    require(mu.size() == n && r >= 0 && r < n, ErrorKind::RangeError, "hook index out of range");
    auto mm = mu.multiplicities();
    auto m_mu = [&](int j) { return mm.count(j) ? mm.at(j) : 0; };
    Int total = 0;
    for (const auto& nu : partitions_of(r)) {
        auto mn = nu.multiplicities();
        int even_parts = 0;
        for (auto [part, mult] : mn)
            if (part % 2 == 0) even_parts += mult;
        Int term = binomial(m_mu(1) - 1, nu.multiplicity(1));
        for (int j = 2; j <= r; ++j) term *= binomial(m_mu(j), nu.multiplicity(j));
        total += (even_parts % 2 == 0) ? term : Int(-term);
    }
    return total;
}

namespace {

template <typename HookValue>
Int stanley_with(int n, int k, const Partition& mu, HookValue&& chi) {
    require(n >= 1 && k >= 1 && mu.size() == n, ErrorKind::InvalidInput, "stanley_count needs mu |- n, k >= 1");
    Rational sum = 0;
    for (int r = 0; r < n; ++r) {
        Rational term(chi(r));
        term /= Rational(pow_int(binomial(n - 1, r), static_cast<unsigned>(k - 1)));
        if ((static_cast<long>(r) * k) % 2 == 1) term = -term;
        sum += term;
    }
    Int cycles = factorial(static_cast<unsigned>(n - 1));
    Int class_size = factorial(static_cast<unsigned>(n)) / z_of(mu);
    Rational value = Rational(pow_int(cycles, static_cast<unsigned>(k)) * class_size) / Rational(factorial(n)) * sum;
    return to_integer(value, "stanley count");
}

}  // namespace

Int stanley_count(int n, int k, const Partition& mu) {
    return stanley_with(n, k, mu, [&](int r) { return Int(mn_character(hook(n, r), mu)); });
}

Int stanley_count_explicit(int n, int k, const Partition& mu) {
    return stanley_with(n, k, mu, [&](int r) { return hook_char_explicit(n, r, mu); });
}

}  // namespace glnq
