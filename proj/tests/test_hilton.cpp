#include "support.hpp"

#include "loopcalc/error.hpp"
#include "loopcalc/hilton.hpp"

#include <algorithm>
#include <functional>

using namespace loopcalc;

namespace {

// Lyndon words by definition: strictly smaller than every proper rotation.
// Enumerates all words, so only for tiny alphabets.
DimMultiset brute_force_lyndon(const std::vector<int>& weights, int cap)
{
    DimMultiset out;
    const int min_w = *std::min_element(weights.begin(), weights.end());
    std::vector<int> word;
    std::function<void(int)> grow = [&](int weight) {
        if (!word.empty()) {
            bool lyndon = true;
            for (std::size_t r = 1; r < word.size() && lyndon; ++r) {
                std::vector<int> rot(word.begin() + static_cast<std::ptrdiff_t>(r), word.end());
                rot.insert(rot.end(), word.begin(), word.begin() + static_cast<std::ptrdiff_t>(r));
                lyndon = word < rot;
            }
            if (lyndon)
                accumulate(out, weight, 1);
        }
        if (weight + min_w > cap)
            return;
        for (int letter = 0; letter < static_cast<int>(weights.size()); ++letter) {
            const int w = weights[static_cast<std::size_t>(letter)];
            if (weight + w > cap)
                continue;
            word.push_back(letter);
            grow(weight + w);
            word.pop_back();
        }
    };
    grow(0);
    return out;
}

} // namespace

TEST_SUITE("hilton")
{
    TEST_CASE("Lyndon counts on small alphabets")
    {
        CHECK(lyndon_multiplicities(WeightedAlphabet(std::vector<int>{1, 1}), 5) == DimMultiset{{1, 2}, {2, 1}, {3, 2}, {4, 3}, {5, 6}});
        CHECK(lyndon_multiplicities(WeightedAlphabet(std::vector<int>{4}), 12) == DimMultiset{{4, 1}});
        CHECK(lyndon_multiplicities(WeightedAlphabet(std::vector<int>{1, 2}), 4) == DimMultiset{{1, 1}, {2, 1}, {3, 1}, {4, 1}});
    }

    TEST_CASE("Witt counts")
    {
        CHECK(witt_counts(WeightedAlphabet(std::vector<int>{1, 1}), 5) == DimMultiset{{1, 2}, {2, 1}, {3, 2}, {4, 3}, {5, 6}});
        CHECK(witt_counts(WeightedAlphabet(std::vector<int>{1}), 5) == DimMultiset{{1, 1}});
        CHECK(witt_counts(WeightedAlphabet(std::vector<int>{1, 1, 1}), 3) == DimMultiset{{1, 3}, {2, 3}, {3, 8}});
    }

    TEST_CASE("counting agrees with brute-force enumeration by definition")
    {
        const std::vector<std::vector<int>> alphabets{{1}, {1, 1}, {1, 2}, {2, 3}, {1, 1, 1}, {1, 1, 2}, {1, 2, 3}, {2, 2, 4}, {1, 3, 3, 4}};
        for (const auto& weights : alphabets) {
            CAPTURE(weights.size());
            const DimMultiset expected = brute_force_lyndon(weights, 9);
            CHECK(lyndon_multiplicities(WeightedAlphabet(weights), 9) == expected);
            CHECK(witt_counts(WeightedAlphabet(weights), 9) == expected);
            DimMultiset duval;
            for_each_lyndon_word(weights, 9, [&](std::span<const int>, int w) { accumulate(duval, w, 1); });
            CHECK(duval == expected);
        }
    }

    TEST_CASE("Duval visits words in lexicographic order with correct weights")
    {
        const std::vector<int> weights{1, 2};
        std::vector<std::vector<int>> words;
        for_each_lyndon_word(weights, 4, [&](std::span<const int> word, int w) {
            int sum = 0;
            for (int letter : word)
                sum += weights[static_cast<std::size_t>(letter)];
            CHECK(sum == w);
            words.emplace_back(word.begin(), word.end());
        });
        CHECK(words == std::vector<std::vector<int>>{{0}, {0, 0, 1}, {0, 1}, {1}});
    }

    TEST_CASE("large alphabets are counted without enumeration")
    {
        // 40 letters of weight 1: necklace numbers; L_3 = (40^3 - 40) / 3.
        const DimMultiset l = lyndon_multiplicities(WeightedAlphabet(DimMultiset{{1, 40}}), 3);
        CHECK(l.at(1) == 40);
        CHECK(l.at(2) == 780);
        CHECK(l.at(3) == 21320);
        CHECK(l == witt_counts(WeightedAlphabet(DimMultiset{{1, 40}}), 3));
    }

    TEST_CASE("Hilton-Milnor factorizations")
    {
        const FactorList a = hilton_milnor(SphereWedge{{2, 2}}, 5);
        CHECK(a.loop_spheres == DimMultiset{{2, 2}, {3, 1}, {4, 2}, {5, 3}, {6, 6}});
        CHECK(a.truncated);
        CHECK(a.circles == 0);
        CHECK(a.spheres.empty());

        const FactorList b = hilton_milnor(SphereWedge{{7, 1}}, 10);
        CHECK(b.loop_spheres == DimMultiset{{7, 1}});
        CHECK_FALSE(b.truncated);

        const FactorList c = hilton_milnor(SphereWedge{{2, 1}, {3, 1}}, 4);
        CHECK(c.loop_spheres == DimMultiset{{2, 1}, {3, 1}, {4, 1}, {5, 1}});
        CHECK(c.truncated);

        CHECK(hilton_milnor(SphereWedge{}, 5).empty());
        // A single sphere above the cap is dropped and flagged.
        const FactorList d = hilton_milnor(SphereWedge{{9, 1}}, 5);
        CHECK(d.empty());
        CHECK(d.truncated);
    }

    TEST_CASE("a single letter gives one factor in its own degree")
    {
        for (int w = 1; w <= 10; ++w)
            CHECK(lyndon_multiplicities(WeightedAlphabet({w}), 20) == DimMultiset{{w, 1}});
    }

    TEST_CASE("alphabet validation")
    {
        CHECK_THROWS_AS(WeightedAlphabet(std::vector<int>{}), Error);
        CHECK_THROWS_AS(WeightedAlphabet(std::vector<int>{0}), Error);
        CHECK(WeightedAlphabet::of_wedge(SphereWedge{{2, 1}, {4, 2}}).weight_counts() == DimMultiset{{1, 1}, {3, 2}});
    }

    TEST_CASE("products add multiplicities")
    {
        FactorList x = hilton_milnor(SphereWedge{{3, 1}}, 10);
        FactorList y = hilton_milnor(SphereWedge{{3, 1}, {5, 1}}, 10);
        const FactorList p = product(x, y);
        CHECK(p.loop_spheres.at(3) == 2);
        CHECK(p.truncated);
        CHECK_THROWS_AS((void)product(x, hilton_milnor(SphereWedge{{3, 1}}, 11)), Error);
    }
}
