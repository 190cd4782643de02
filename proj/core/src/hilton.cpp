#include "loopcalc/hilton.hpp"

#include "loopcalc/error.hpp"

#include <algorithm>

namespace loopcalc {

WeightedAlphabet::WeightedAlphabet(const std::vector<int>& weights)
{
    require(!weights.empty(), ErrorKind::Domain, "alphabet must be nonempty");
    for (int w : weights) {
        require(w >= 1, ErrorKind::Domain, "letter weights must be >= 1");
        accumulate(counts_, w, 1);
    }
}

WeightedAlphabet::WeightedAlphabet(DimMultiset weight_counts)
{
    for (auto& [w, c] : weight_counts) {
        require(w >= 1, ErrorKind::Domain, "letter weights must be >= 1");
        require(c >= 0, ErrorKind::Domain, "negative letter count");
        accumulate(counts_, w, c);
    }
    require(!counts_.empty(), ErrorKind::Domain, "alphabet must be nonempty");
}

WeightedAlphabet WeightedAlphabet::of_wedge(const SphereWedge& w)
{
    DimMultiset counts;
    for (const auto& [d, m] : w.dims())
        counts.emplace(d - 1, m);
    return WeightedAlphabet(std::move(counts));
}

BigInt WeightedAlphabet::letter_count() const
{
    BigInt n = 0;
    for (const auto& [w, c] : counts_)
        n += c;
    return n;
}

std::vector<int> WeightedAlphabet::letters() const
{
    require(letter_count() <= 64, ErrorKind::Usage, "alphabet too large to list letter by letter");
    std::vector<int> out;
    for (const auto& [w, c] : counts_)
        for (int i = 0; i < c.convert_to<int>(); ++i)
            out.push_back(w);
    return out;
}

FactorList product(const FactorList& a, const FactorList& b)
{
    require(a.cap == b.cap, ErrorKind::Usage, "product of factor lists with different caps");
    FactorList r = a;
    r.circles += b.circles;
    for (const auto& [d, m] : b.spheres)
        accumulate(r.spheres, d, m);
    for (const auto& [d, m] : b.loop_spheres)
        accumulate(r.loop_spheres, d, m);
    r.truncated = a.truncated || b.truncated;
    return r;
}

void for_each_lyndon_word(std::span<const int> letter_weights, int cap,
                          const std::function<void(std::span<const int>, int)>& visit)
{
    const int k = static_cast<int>(letter_weights.size());
    if (k == 0 || cap < 1)
        return;
    const int min_weight = *std::min_element(letter_weights.begin(), letter_weights.end());
    const int max_len = cap / min_weight;
    if (max_len == 0)
        return;

    // Duval: each iterate is a Lyndon word; the successor repeats it to
    // max_len, drops trailing maximal letters and increments the last letter.
    std::vector<int> word{0};
    while (!word.empty()) {
        int weight = 0;
        for (int letter : word)
            weight += letter_weights[static_cast<std::size_t>(letter)];
        if (weight <= cap)
            visit(word, weight);
        const std::size_t n = word.size();
        while (word.size() < static_cast<std::size_t>(max_len))
            word.push_back(word[word.size() - n]);
        while (!word.empty() && word.back() == k - 1)
            word.pop_back();
        if (!word.empty())
            ++word.back();
    }
}

namespace {

int mobius(int n)
{
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0)
                return 0;
            result = -result;
        }
    }
    return n > 1 ? -result : result;
}

// Lyndon words of length n over c letters: (1/n) sum_{d|n} mu(d) c^(n/d).
BigInt necklace_count(const BigInt& c, int n)
{
    BigInt total = 0;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0)
            total += mobius(d) * boost::multiprecision::pow(c, static_cast<unsigned>(n / d));
    return total / n;
}

} // namespace

DimMultiset lyndon_multiplicities(const WeightedAlphabet& a, int cap)
{
    require(cap >= 1, ErrorKind::Usage, "cap must be >= 1");
    std::vector<BigInt> letters(static_cast<std::size_t>(cap) + 1);
    for (const auto& [w, c] : a.weight_counts())
        if (w <= cap)
            letters[static_cast<std::size_t>(w)] = c;

    std::vector<BigInt> lyndon(static_cast<std::size_t>(cap) + 1);
    for (int w = 1; w <= cap; ++w) {
        const BigInt c = letters[static_cast<std::size_t>(w)];
        if (c == 0)
            continue;
        for (int n = 1; n * w <= cap; ++n)
            lyndon[static_cast<std::size_t>(n * w)] += necklace_count(c, n);
        // The remaining letters all weigh more than w; replace them by B/(1 - c t^w).
        letters[static_cast<std::size_t>(w)] = 0;
        for (int d = w + 1; d <= cap; ++d)
            letters[static_cast<std::size_t>(d)] += c * letters[static_cast<std::size_t>(d - w)];
    }

    DimMultiset out;
    for (int d = 1; d <= cap; ++d)
        accumulate(out, d, lyndon[static_cast<std::size_t>(d)]);
    return out;
}

DimMultiset witt_counts(const WeightedAlphabet& a, int cap)
{
    require(cap >= 1, ErrorKind::Usage, "cap must be >= 1");
    TruncatedSeries letters(cap);
    for (const auto& [w, c] : a.weight_counts())
        if (w <= cap)
            letters[w] = c;
    // All words: 1/(1 - A). Strip (1 - t^d)^(-L_d) factors in increasing d.
    TruncatedSeries residual = tensor_algebra_series(letters);
    DimMultiset out;
    for (int d = 1; d <= cap; ++d) {
        const BigInt ld = residual[d];
        require(ld >= 0, ErrorKind::Oracle, "witt_counts: negative Lyndon count");
        if (ld == 0)
            continue;
        accumulate(out, d, ld);
        TruncatedSeries factor(cap);
        for (int k = 0; k * d <= cap; ++k) {
            BigInt c = binomial(ld, static_cast<unsigned>(k));
            if (c == 0)
                break;
            factor[k * d] = (k % 2 == 0) ? c : BigInt(-c);
        }
        residual = mul(residual, factor);
    }
    return out;
}

FactorList hilton_milnor(const SphereWedge& w, int cap)
{
    require(cap >= 1, ErrorKind::Usage, "cap must be >= 1");
    FactorList f;
    f.cap = cap;
    if (w.empty())
        return f;
    for (const auto& [d, count] : lyndon_multiplicities(WeightedAlphabet::of_wedge(w), cap))
        f.loop_spheres.emplace(d + 1, count);
    if (w.size() >= 2)
        f.truncated = true;
    else
        f.truncated = w.dims().begin()->first - 1 > cap;
    return f;
}

} // namespace loopcalc
