#include "doldmap/words.hpp"

namespace doldmap {

primitivity_error::primitivity_error(int n_, Word word_)
    : std::runtime_error("ptm_prefix(" + std::to_string(n_) +
                         ") is not primitive: " + word_),
      n(n_),
      word(std::move(word_)) {}

void validate_word(const Word& w) {
    if (w.empty()) throw std::invalid_argument("word must be nonempty");
    for (char c : w) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("word symbols must be 0 or 1");
    }
}

Word ptm_prefix(int n) {
    if (n < 1) throw std::invalid_argument("ptm_prefix requires n >= 1");
    Word w = "0";
    while (static_cast<int>(w.size()) < n) {
        Word next;
        next.reserve(2 * w.size());
        for (char c : w) next += (c == '0') ? "01" : "10";
        w = std::move(next);
    }
    w.resize(n);
    return w;
}

PowerHit find_k_power(const Word& w, int k) {
    validate_word(w);
    if (k < 2) throw std::invalid_argument("power exponent must be >= 2");
    const int len = static_cast<int>(w.size());
    // w[i..i+k*b) is u^k iff w has period b across that window.
    for (int b = 1; k * b <= len; ++b) {
        for (int i = 0; i + k * b <= len; ++i) {
            bool hit = true;
            for (int j = 0; j < (k - 1) * b; ++j) {
                if (w[i + j] != w[i + j + b]) {
                    hit = false;
                    break;
                }
            }
            if (hit) return {i, b};
        }
    }
    return {};
}

bool is_k_power_free(const Word& w, int k) { return !find_k_power(w, k).found(); }

std::vector<Word> conjugates(const Word& w) {
    validate_word(w);
    std::vector<Word> rots;
    rots.reserve(w.size());
    for (size_t r = 0; r < w.size(); ++r)
        rots.push_back(w.substr(r) + w.substr(0, r));
    return rots;
}

int least_period(const Word& w) {
    validate_word(w);
    const int len = static_cast<int>(w.size());
    for (int d = 1; d < len; ++d) {
        if (len % d != 0) continue;
        bool periodic = true;
        for (int i = d; i < len; ++i) {
            if (w[i] != w[i - d]) {
                periodic = false;
                break;
            }
        }
        if (periodic) return d;
    }
    return len;
}

bool is_primitive(const Word& w) {
    return least_period(w) == static_cast<int>(w.size());
}

CircularPowerHit find_circular_k_power(const Word& w, int k) {
    validate_word(w);
    if (k < 2) throw std::invalid_argument("power exponent must be >= 2");
    const int len = static_cast<int>(w.size());
    for (int r = 0; r < len; ++r) {
        // prefix of the rotated stream, indexed without materializing it
        auto at = [&](int i) { return w[(r + i) % len]; };
        for (int b = 1; k * b <= len; ++b) {
            bool hit = true;
            for (int j = 0; j < (k - 1) * b; ++j) {
                if (at(j) != at(j + b)) {
                    hit = false;
                    break;
                }
            }
            if (hit) return {r, b};
        }
    }
    return {};
}

bool circular_k_power_free(const Word& w, int k) {
    return !find_circular_k_power(w, k).found();
}

PrefixPowerHit first_power_in_prefixes(int n_max, int k) {
    if (n_max < 1) throw std::invalid_argument("first_power_in_prefixes requires n_max >= 1");
    if (k < 2) throw std::invalid_argument("power exponent must be >= 2");
    const Word w = ptm_prefix(n_max);
    for (int e = k; e <= n_max; ++e) {
        for (int b = 1; k * b <= e; ++b) {
            const int i = e - k * b;
            bool hit = true;
            for (int j = 0; j < (k - 1) * b; ++j) {
                if (w[i + j] != w[i + j + b]) {
                    hit = false;
                    break;
                }
            }
            if (hit) return {e, i, b};
        }
    }
    return {};
}

std::map<int, std::vector<PeriodicStream>> build_stream_family(int n_max) {
    if (n_max < 1) throw std::invalid_argument("build_stream_family requires n_max >= 1");
    std::map<int, std::vector<PeriodicStream>> family;
    for (int n = 1; n <= n_max; ++n) {
        Word s = ptm_prefix(n);
        if (!is_primitive(s)) throw primitivity_error(n, s);
        std::vector<PeriodicStream> streams;
        streams.reserve(n);
        for (Word& rot : conjugates(s))
            streams.push_back({std::move(rot), n});
        family.emplace(n, std::move(streams));
    }
    return family;
}

}  // namespace doldmap
