#include "doctest.h"
#include "dwa/seq.hpp"

#include <set>

using namespace dwa;

namespace {

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("enumeration matches the interleaving count and order") {
    RedSpec s{{1, 2}};
    auto seqs = enumerate_seq(s, 1);
    REQUIRE(seqs.size() == 3);
    CHECK(seqs[0].to_string() == "b,1,2");
    CHECK(seqs[1].to_string() == "1,b,2");
    CHECK(seqs[2].to_string() == "1,2,b");

    CHECK(enumerate_seq(RedSpec{}, 2).size() == 1);
    CHECK(enumerate_seq(RedSpec{}, 2)[0].to_string() == "b,b");
    CHECK(enumerate_seq(RedSpec{{2}}, 0).size() == 1);
    CHECK(enumerate_seq(RedSpec{{2}}, 0)[0].to_string() == "2");

    for (int m = 0; m <= 4; ++m) {
        RedSpec spec;
        for (int k = 0; k < m; ++k) spec.labels.push_back(k % 3);
        for (int n = 0; n <= 4; ++n)
            CHECK(enumerate_seq(spec, n).size() == static_cast<std::size_t>(binom(m + n, n)));
    }
}

TEST_CASE("transpose") {
    RedSpec s{{1, 2}};
    StrandSeq b12 = StrandSeq::parse("b,1,2", s);
    auto t1 = transpose(b12, 1);
    REQUIRE(t1.has_value());
    CHECK(t1->to_string() == "1,b,2");

    StrandSeq s12b = StrandSeq::parse("1,2,b", s);
    CHECK(!transpose(s12b, 1).has_value());  // two reds may not swap

    StrandSeq bb = StrandSeq::all_black(2);
    auto tbb = transpose(bb, 1);
    REQUIRE(tbb.has_value());
    CHECK(*tbb == bb);

    CHECK_THROWS_AS(transpose(bb, 2), argument_error);

    // involution whenever both directions are valid
    for (auto& seq : enumerate_seq(s, 2)) {
        for (int j = 1; j < seq.size(); ++j) {
            auto once = transpose(seq, j);
            if (!once) continue;
            auto twice = transpose(*once, j);
            REQUIRE(twice.has_value());
            CHECK(*twice == seq);
        }
    }
}

TEST_CASE("spec merge and split") {
    CHECK(merge_spec(RedSpec{{1, 2}}, 1) == RedSpec{{3}});
    CHECK(merge_spec(RedSpec{{2, 0, 1}}, 2) == RedSpec{{2, 1}});
    CHECK(split_spec(RedSpec{{3}}, 1, 1) == RedSpec{{2, 1}});
    CHECK(split_spec(RedSpec{{3}}, 1, 0) == RedSpec{{3, 0}});
    CHECK(split_spec(RedSpec{{1, 2}}, 2, 2) == RedSpec{{1, 0, 2}});
    CHECK_THROWS_AS(split_spec(RedSpec{{3}}, 1, 4), argument_error);
    CHECK_THROWS_AS(merge_spec(RedSpec{{3}}, 1), argument_error);

    // phi_{j, s_{j+1}}(s^j) = s
    std::vector<RedSpec> specs = {RedSpec{{1, 2}}, RedSpec{{2, 0, 1}}, RedSpec{{3, 1, 2, 0}}};
    for (const auto& spec : specs)
        for (int j = 1; j < spec.m(); ++j)
            CHECK(split_spec(merge_spec(spec, j), j, spec.label(j + 1)) == spec);
}

TEST_CASE("sequence split") {
    RedSpec s3{{3}};
    CHECK(split_sequence(StrandSeq::parse("b,3", s3), 1, 1).to_string() == "b,2,1");
    CHECK(split_sequence(StrandSeq::parse("3,b", s3), 1, 0).to_string() == "3,0,b");

    // split is injective Seq(s,n) -> Seq(phi_{j,a}(s),n), exhaustively at small size
    for (int m = 1; m <= 3; ++m) {
        RedSpec spec;
        for (int k = 0; k < m; ++k) spec.labels.push_back(2);
        for (int n = 0; n <= 3; ++n) {
            for (int j = 1; j <= m; ++j) {
                for (int a = 0; a <= 2; ++a) {
                    std::set<std::vector<std::uint8_t>> images;
                    for (auto& seq : enumerate_seq(spec, n))
                        images.insert(split_sequence(seq, j, a).slots());
                    CHECK(images.size() == enumerate_seq(spec, n).size());
                }
            }
        }
    }
}

TEST_CASE("split then merge recovers the sequence") {
    RedSpec spec{{2, 1, 3}};
    for (int n = 0; n <= 3; ++n) {
        for (auto& seq : enumerate_seq(spec, n)) {
            for (int j = 1; j <= spec.m(); ++j) {
                for (int a = 0; a <= spec.label(j); ++a) {
                    StrandSeq split = split_sequence(seq, j, a);
                    CHECK(merge_sequence(split, j) == seq);
                }
            }
        }
    }
}

TEST_CASE("adjacent pair idempotents") {
    RedSpec s{{1, 2}};
    auto block = adjacent_pair_idempotents(s, 1, 1);
    REQUIRE(block.size() == 2);
    CHECK(block[0].to_string() == "b,1,2");
    CHECK(block[1].to_string() == "1,2,b");

    CHECK(adjacent_pair_idempotents(s, 0, 1).size() == 1);

    // |Seq^j(s,n)| = C(m-1+n, n) via the bijection with Seq(s^j, n)
    for (int m = 2; m <= 3; ++m) {
        RedSpec spec;
        for (int k = 0; k < m; ++k) spec.labels.push_back(k);
        for (int n = 0; n <= 3; ++n)
            for (int j = 1; j < m; ++j)
                CHECK(adjacent_pair_idempotents(spec, n, j).size() ==
                      static_cast<std::size_t>(binom(m - 1 + n, n)));
    }
}

TEST_CASE("textual form round trips") {
    RedSpec s{{2, 0}};
    for (int n = 0; n <= 3; ++n)
        for (auto& seq : enumerate_seq(s, n)) CHECK(StrandSeq::parse(seq.to_string(), s) == seq);
    CHECK_THROWS_AS(StrandSeq::parse("b,1", s), argument_error);   // wrong label
    CHECK_THROWS_AS(StrandSeq::parse("2,0,1", s), argument_error); // extra red
}
