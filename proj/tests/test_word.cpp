#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <memory>
#include <random>

#include "raaglab/word.hpp"

using namespace raaglab;

namespace {
std::shared_ptr<const Raag> path_ambient() {
    return std::make_shared<Raag>(
        Graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}));
}
std::shared_ptr<const Raag> free_ambient() {
    return std::make_shared<Raag>(Graph({"a", "b", "c"}, {}));
}
} // namespace

TEST_CASE("normal form merges, cancels, and sorts commuting runs") {
    auto amb = path_ambient();  // a-b commute, b-c commute, a-c do not
    CHECK(Word::parse(amb, "a a^-1").is_identity());
    CHECK(Word::parse(amb, "b a").str() == "a b");          // commuting, sorted
    CHECK(Word::parse(amb, "c a").str() == "c a");          // no commutation
    CHECK(Word::parse(amb, "a b a").str() == "a^2 b");      // shuffle past b
    CHECK(Word::parse(amb, "a b a^-1").str() == "b");
    CHECK(Word::parse(amb, "c b c^-1 b").str() == "b^2");
    CHECK(Word::parse(amb, "a c c^-1 a^-1").is_identity());
}

TEST_CASE("equal elements normalize identically") {
    auto amb = path_ambient();
    // b is central among {a,b}: all interleavings of a^2 b^3 agree
    Word w1 = Word::parse(amb, "a b a b b");
    Word w2 = Word::parse(amb, "b b a a b");
    Word w3 = Word::parse(amb, "a a b^3");
    CHECK(w1 == w2);
    CHECK(w2 == w3);
    // but a and c generate a free group
    CHECK(Word::parse(amb, "a c") != Word::parse(amb, "c a"));
}

TEST_CASE("group laws") {
    auto amb = free_ambient();
    Word w = Word::parse(amb, "a b^-2 c a^-1");
    CHECK((w * w.inverse()).is_identity());
    CHECK((w.inverse() * w).is_identity());
    Word u = Word::parse(amb, "c^3 b");
    CHECK(((w * u) * u.inverse()) == w);
    CHECK((w * u).inverse() == u.inverse() * w.inverse());
}

TEST_CASE("str / parse round trip") {
    auto amb = path_ambient();
    for (const char* s : {"1", "a", "a^-1", "a^2 b", "c a c^-1"}) {
        Word w = Word::parse(amb, s);
        CHECK(Word::parse(amb, w.str()) == w);
    }
    CHECK(Word(amb).str() == "1");
    CHECK_THROWS_AS(Word::parse(amb, "z"), domain_error);
    CHECK_THROWS_AS(Word::parse(amb, "a^"), domain_error);
}

TEST_CASE("random words: normalization is a congruence") {
    auto amb = path_ambient();
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        std::vector<Letter> raw;
        for (int k = 0; k < 8; ++k)
            raw.push_back({rng() % 3, static_cast<long long>(rng() % 5) - 2});
        Word w(amb, raw);
        // multiplying the letters one at a time gives the same normal form
        Word acc(amb);
        for (const Letter& l : raw)
            acc = acc * Word(amb, {l});
        CHECK(acc == w);
        CHECK((w * w.inverse()).is_identity());
    }
}

TEST_CASE("generator actions") {
    auto amb = path_ambient();
    const Graph& g = amb->graph();
    Word w = Word::parse(amb, "a c");

    AutGenerator inv;
    inv.kind = AutGenerator::Kind::Inversion;
    inv.v = g.index_of("a");
    CHECK(apply_generator(inv, w).str() == "a^-1 c");
    CHECK(apply_generator(inv, apply_generator(inv, w)) == w);

    AutGenerator tv;  // a -> ab
    tv.kind = AutGenerator::Kind::Transvection;
    tv.v = g.index_of("a");
    tv.w = g.index_of("b");
    CHECK(apply_generator(tv, Word::parse(amb, "a")).str() == "a b");
    CHECK(apply_generator_inverse(tv, apply_generator(tv, w)) == w);

    AutGenerator pc;  // conjugate the component {c} by a
    pc.kind = AutGenerator::Kind::PartialConjugation;
    pc.v = g.index_of("a");
    pc.component = {g.index_of("c")};
    CHECK(apply_generator(pc, Word::parse(amb, "c")).str() == "a c a^-1");
    CHECK(apply_generator(pc, Word::parse(amb, "b")).str() == "b");
    CHECK(apply_generator_inverse(pc, apply_generator(pc, w)) == w);

    AutGenerator ga;  // swap a and c
    ga.kind = AutGenerator::Kind::GraphAut;
    ga.perm = {g.index_of("c"), g.index_of("b"), g.index_of("a")};
    CHECK(apply_generator(ga, Word::parse(amb, "a b")).str() == "b c");
    CHECK(apply_generator_inverse(ga, apply_generator(ga, w)) == w);
}

TEST_CASE("automorphism property on random words") {
    auto amb = path_ambient();
    std::mt19937_64 rng(11);
    auto gens = enumerate_generators(*amb);
    for (int t = 0; t < 100; ++t) {
        std::vector<Letter> ra, rb;
        for (int k = 0; k < 5; ++k) {
            ra.push_back({rng() % 3, static_cast<long long>(rng() % 3) - 1});
            rb.push_back({rng() % 3, static_cast<long long>(rng() % 3) - 1});
        }
        Word x(amb, ra), y(amb, rb);
        const AutGenerator& g = gens[rng() % gens.size()];
        CHECK(apply_generator(g, x * y) ==
              apply_generator(g, x) * apply_generator(g, y));
        CHECK(apply_generator_inverse(g, apply_generator(g, x)) == x);
    }
}
