#include "xm/crystal.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace xm {

bool letter_valid(Letter b, const CartanType& t) {
    if (t.family == Family::A) return b.value >= 1 && b.value <= t.rank + 1;
    const int k = std::abs(b.value);
    return k >= 1 && k <= t.rank;
}

std::vector<Letter> alphabet(const CartanType& t) {
    std::vector<Letter> out;
    if (t.family == Family::A) {
        for (int v = 1; v <= t.rank + 1; ++v) out.push_back({v});
        return out;
    }
    for (int v = 1; v <= t.rank; ++v) out.push_back({v});
    for (int v = t.rank; v >= 1; --v) out.push_back({-v});
    return out;
}

int letter_index(Letter b, const CartanType& t) {
    if (!letter_valid(b, t)) throw std::domain_error("letter outside the alphabet");
    if (t.family == Family::A) return b.value - 1;
    return b.value > 0 ? b.value - 1 : 2 * t.rank - (-b.value);
}

std::string letter_str(Letter b) {
    return std::to_string(std::abs(b.value)) + (b.value < 0 ? "b" : "");
}

Letter parse_letter(const std::string& s, const CartanType& t) {
    if (s.empty()) throw std::invalid_argument("empty letter");
    bool bar = false;
    std::string digits = s;
    if (digits.back() == 'b') {
        bar = true;
        digits.pop_back();
    }
    size_t used = 0;
    long v = std::stol(digits, &used);
    if (used != digits.size() || v < 1) throw std::invalid_argument("bad letter '" + s + "'");
    Letter b{bar ? -static_cast<int>(v) : static_cast<int>(v)};
    if (!letter_valid(b, t)) throw std::domain_error("letter '" + s + "' outside the alphabet");
    return b;
}

Weight letter_weight(Letter b, const CartanType& t) {
    if (!letter_valid(b, t)) throw std::domain_error("letter outside the alphabet");
    Weight w = zero_weight(t);
    const int k = std::abs(b.value);
    w.coords[static_cast<size_t>(k - 1)] = b.value > 0 ? 1 : -1;
    return w;
}

std::optional<Letter> f_letter(Letter b, int i, const CartanType& t) {
    if (!letter_valid(b, t)) throw std::domain_error("letter outside the alphabet");
    const int n = t.rank;
    if (i < 0 || i > n) throw std::invalid_argument("crystal index out of range");
    const int v = b.value;
    if (t.family == Family::A) {
        if (i == 0) return v == n + 1 ? std::optional<Letter>(Letter{1}) : std::nullopt;
        return v == i ? std::optional<Letter>(Letter{v + 1}) : std::nullopt;
    }
    if (i == 0) {
        if (v == -2) return Letter{1};
        if (v == -1) return Letter{2};
        return std::nullopt;
    }
    if (i == n) {
        if (v == n - 1) return Letter{-n};
        if (v == n) return Letter{-(n - 1)};
        return std::nullopt;
    }
    // 1 <= i <= n-1: i -> i+1 on the unbarred side, (i+1)-bar -> i-bar
    if (v == i) return Letter{v + 1};
    if (v == -(i + 1)) return Letter{-i};
    return std::nullopt;
}

std::optional<Letter> e_letter(Letter b, int i, const CartanType& t) {
    if (!letter_valid(b, t)) throw std::domain_error("letter outside the alphabet");
    const int n = t.rank;
    if (i < 0 || i > n) throw std::invalid_argument("crystal index out of range");
    const int v = b.value;
    if (t.family == Family::A) {
        if (i == 0) return v == 1 ? std::optional<Letter>(Letter{n + 1}) : std::nullopt;
        return v == i + 1 ? std::optional<Letter>(Letter{v - 1}) : std::nullopt;
    }
    if (i == 0) {
        if (v == 1) return Letter{-2};
        if (v == 2) return Letter{-1};
        return std::nullopt;
    }
    if (i == n) {
        if (v == -n) return Letter{n - 1};
        if (v == -(n - 1)) return Letter{n};
        return std::nullopt;
    }
    if (v == i + 1) return Letter{v - 1};
    if (v == -i) return Letter{-(i + 1)};
    return std::nullopt;
}

std::pair<int, int> eps_phi_letter(Letter b, int i, const CartanType& t) {
    int eps = 0;
    for (Letter cur = b;;) {
        auto up = e_letter(cur, i, t);
        if (!up) break;
        cur = *up;
        ++eps;
    }
    int phi = 0;
    for (Letter cur = b;;) {
        auto down = f_letter(cur, i, t);
        if (!down) break;
        cur = *down;
        ++phi;
    }
    return {eps, phi};
}

Path make_path(const TensorSpec& spec, std::vector<Letter> factors) {
    if (spec.length != static_cast<int>(factors.size()))
        throw std::invalid_argument("path length does not match its tensor spec");
    for (Letter b : factors)
        if (!letter_valid(b, spec.type)) throw std::domain_error("path letter outside the alphabet");
    return Path{spec, std::move(factors)};
}

std::string path_str(const Path& p) {
    std::string out;
    for (size_t k = 0; k < p.factors.size(); ++k) {
        if (k) out += " ";
        out += letter_str(p.factors[k]);
    }
    return out;
}

Weight path_weight(const Path& p) {
    Weight w = zero_weight(p.spec.type);
    for (Letter b : p.factors) w = add(w, letter_weight(b, p.spec.type));
    return w;
}

std::pair<int, int> eps_phi_range(const Path& p, int from, int to, int i) {
    int eps = 0, phi = 0;
    for (int k = from; k < to; ++k) {
        const auto [eb, pb] = eps_phi_letter(p.factors[static_cast<size_t>(k)], i, p.spec.type);
        const int new_eps = std::max(eb, eps + eb - pb);
        const int new_phi = std::max(phi, phi + pb - eps);
        eps = new_eps;
        phi = new_phi;
    }
    return {eps, phi};
}

int eps_path(const Path& p, int i) {
    return eps_phi_range(p, 0, static_cast<int>(p.factors.size()), i).first;
}

int phi_path(const Path& p, int i) {
    return eps_phi_range(p, 0, static_cast<int>(p.factors.size()), i).second;
}

namespace {

// The position the operator rule selects, walking the left-associated
// bracketing (((b_L (x) b_{L-1}) (x) ...) (x) b_1) from the outermost split
// inward. strict = true gives the e rule (act left iff eps(left) > phi
// of the right letter), strict = false the f rule (>=).
std::optional<int> selected_position(const Path& p, int i, bool strict) {
    const int L = static_cast<int>(p.factors.size());
    if (L == 0) return std::nullopt;
    // prefix_eps[k] = eps_i of the first k factors
    std::vector<int> prefix_eps(static_cast<size_t>(L) + 1, 0);
    {
        int eps = 0, phi = 0;
        for (int k = 0; k < L; ++k) {
            const auto [eb, pb] =
                eps_phi_letter(p.factors[static_cast<size_t>(k)], i, p.spec.type);
            const int new_eps = std::max(eb, eps + eb - pb);
            const int new_phi = std::max(phi, phi + pb - eps);
            eps = new_eps;
            phi = new_phi;
            prefix_eps[static_cast<size_t>(k + 1)] = eps;
        }
    }
    int k = L;
    while (k >= 2) {
        const auto [eb, pb] =
            eps_phi_letter(p.factors[static_cast<size_t>(k - 1)], i, p.spec.type);
        const int left_eps = prefix_eps[static_cast<size_t>(k - 1)];
        const bool act_left = strict ? (left_eps > pb) : (left_eps >= pb);
        if (!act_left) return k - 1;
        --k;
    }
    return 0;
}

}  // namespace

std::optional<int> e_position(const Path& p, int i) { return selected_position(p, i, true); }
std::optional<int> f_position(const Path& p, int i) { return selected_position(p, i, false); }

std::optional<Path> e_path(const Path& p, int i) {
    const auto pos = e_position(p, i);
    if (!pos) return std::nullopt;
    const auto up = e_letter(p.factors[static_cast<size_t>(*pos)], i, p.spec.type);
    if (!up) return std::nullopt;
    Path out = p;
    out.factors[static_cast<size_t>(*pos)] = *up;
    return out;
}

std::optional<Path> f_path(const Path& p, int i) {
    const auto pos = f_position(p, i);
    if (!pos) return std::nullopt;
    const auto down = f_letter(p.factors[static_cast<size_t>(*pos)], i, p.spec.type);
    if (!down) return std::nullopt;
    Path out = p;
    out.factors[static_cast<size_t>(*pos)] = *down;
    return out;
}

bool is_classically_highest(const Path& p) {
    for (int i = 1; i <= p.spec.type.rank; ++i)
        if (eps_path(p, i) != 0) return false;
    return true;
}

namespace {

struct PathSearch {
    const TensorSpec& spec;
    const Weight& lambda;
    std::vector<Letter> letters;
    // per letter, per classical index: eps and phi
    std::vector<std::vector<int>> letter_eps, letter_phi;
    std::vector<Weight> letter_wt;
    std::vector<Path>* out;

    // A word is classically highest iff every suffix is: eps_i never
    // decreases when letters are prepended on the left. So the search
    // builds words right to left keeping eps_i(suffix) = 0 throughout,
    // which needs eps_i(letter) <= phi_i(suffix) at each step.
    std::vector<Letter> word_rl;  // rightmost letter first
    std::vector<int> suffix_phi;  // phi_i of the current suffix, i = 1..n
    Weight wt;

    bool weight_feasible(int remaining) const {
        if (spec.type.family == Family::A) {
            for (size_t c = 0; c < wt.coords.size(); ++c)
                if (wt.coords[c] > lambda.coords[c]) return false;
            return true;
        }
        int deficit = 0;
        for (size_t c = 0; c < wt.coords.size(); ++c)
            deficit += std::abs(lambda.coords[c] - wt.coords[c]);
        return deficit <= remaining && (remaining - deficit) % 2 == 0;
    }

    void run(int remaining) {
        if (!weight_feasible(remaining)) return;
        if (remaining == 0) {
            if (wt != lambda) return;
            Path p{spec, {word_rl.rbegin(), word_rl.rend()}};
            out->push_back(std::move(p));
            return;
        }
        const int n = spec.type.rank;
        for (size_t bi = 0; bi < letters.size(); ++bi) {
            bool ok = true;
            for (int i = 1; i <= n && ok; ++i)
                ok = letter_eps[bi][static_cast<size_t>(i)] <= suffix_phi[static_cast<size_t>(i)];
            if (!ok) continue;
            std::vector<int> saved = suffix_phi;
            for (int i = 1; i <= n; ++i) {
                const size_t si = static_cast<size_t>(i);
                suffix_phi[si] =
                    letter_phi[bi][si] + suffix_phi[si] - letter_eps[bi][si];
            }
            word_rl.push_back(letters[bi]);
            wt = add(wt, letter_wt[bi]);
            run(remaining - 1);
            wt = sub(wt, letter_wt[bi]);
            word_rl.pop_back();
            suffix_phi = saved;
        }
    }
};

}  // namespace

std::vector<Path> enumerate_paths(const TensorSpec& spec, const Weight& lambda) {
    if (static_cast<int>(lambda.coords.size()) != weight_length(spec.type))
        throw std::domain_error("enumerate_paths: weight length mismatch");
    if (spec.length < 0) throw std::invalid_argument("enumerate_paths: negative length");

    std::vector<Path> out;
    {
        // quick necessary condition: total coordinate sum must match
        int total = 0;
        for (int c : lambda.coords) total += c;
        if (spec.type.family == Family::A && total != spec.length) return out;
    }

    PathSearch search{spec, lambda, alphabet(spec.type), {}, {}, {}, &out, {}, {}, {}};
    const int n = spec.type.rank;
    for (Letter b : search.letters) {
        std::vector<int> eps(static_cast<size_t>(n) + 1, 0), phi(static_cast<size_t>(n) + 1, 0);
        for (int i = 1; i <= n; ++i) {
            const auto [e, f] = eps_phi_letter(b, i, spec.type);
            eps[static_cast<size_t>(i)] = e;
            phi[static_cast<size_t>(i)] = f;
        }
        search.letter_eps.push_back(std::move(eps));
        search.letter_phi.push_back(std::move(phi));
        search.letter_wt.push_back(letter_weight(b, spec.type));
    }
    search.suffix_phi.assign(static_cast<size_t>(n) + 1, 0);
    search.wt = zero_weight(spec.type);
    search.run(spec.length);

    std::sort(out.begin(), out.end(), [&](const Path& a, const Path& b) {
        for (size_t k = 0; k < a.factors.size(); ++k) {
            const int ia = letter_index(a.factors[k], spec.type);
            const int ib = letter_index(b.factors[k], spec.type);
            if (ia != ib) return ia < ib;
        }
        return false;
    });
    return out;
}

}  // namespace xm
