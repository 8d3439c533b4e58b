#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dilithium/scheme.hpp"
#include "oracles.hpp"
#include "ref_vectors.hpp"

using namespace dilithium;

namespace {

SeedArray seed_from(std::mt19937_64& rng) {
  SeedArray s;
  for (auto& b : s) b = static_cast<uint8_t>(rng());
  return s;
}

SeedArray kat_seed() {
  const auto z = oracle::unhex(refvec::kKatSeed);
  SeedArray s{};
  std::copy(z.begin(), z.end(), s.begin());
  return s;
}

template <Params P>
void kat_round_trip(const char* pk_hex, const char* sk_hex, const char* sig_hex,
                    int attempts_expected) {
  const auto [pk, sk] = keygen<P>(kat_seed());
  const auto pk_want = oracle::unhex(pk_hex);
  const auto sk_want = oracle::unhex(sk_hex);
  REQUIRE(pk.size() == pk_want.size());
  REQUIRE(sk.size() == sk_want.size());
  CHECK(std::equal(pk.begin(), pk.end(), pk_want.begin()));
  CHECK(std::equal(sk.begin(), sk.end(), sk_want.begin()));

  const auto msg = oracle::unhex(refvec::kKatMessage);
  const auto pre = make_precomp<P>(sk);
  REQUIRE(pre.has_value());
  const auto out = sign_with_precomp<P>(*pre, msg);
  const auto sig_want = oracle::unhex(sig_hex);
  REQUIRE(out.sig.size() == sig_want.size());
  CHECK(std::equal(out.sig.begin(), out.sig.end(), sig_want.begin()));
  CHECK(out.attempts == static_cast<uint32_t>(attempts_expected));
  CHECK(verify<P>(pk, msg, out.sig));

  // reference signature accepted, mutated reference signature rejected
  auto mutated = sig_want;
  mutated[100] ^= 0x20;
  CHECK_FALSE(verify<P>(pk, msg, mutated));
}

}  // namespace

TEST_CASE("known-answer interop, level 2") {
  kat_round_trip<kDilithium2>(refvec::kKatPk2, refvec::kKatSk2, refvec::kKatSig2,
                              refvec::kKatAttempts2);
}

TEST_CASE("known-answer interop, level 3") {
  kat_round_trip<kDilithium3>(refvec::kKatPk3, refvec::kKatSk3, refvec::kKatSig3,
                              refvec::kKatAttempts3);
}

TEST_CASE("known-answer interop, level 5") {
  kat_round_trip<kDilithium5>(refvec::kKatPk5, refvec::kKatSk5, refvec::kKatSig5,
                              refvec::kKatAttempts5);
}

namespace {

template <Params P>
void scheme_properties() {
  std::mt19937_64 rng(601 + P.level);
  const auto [pk, sk] = keygen<P>(seed_from(rng));
  const auto pre = make_precomp<P>(sk);
  REQUIRE(pre.has_value());

  for (int t = 0; t < 30; ++t) {
    std::vector<uint8_t> msg(rng() % 200);
    for (auto& b : msg) b = static_cast<uint8_t>(rng());

    const auto sig = sign_with_precomp<P>(*pre, msg).sig;
    CHECK(verify<P>(pk, msg, sig));

    // determinism: identical bytes on replay
    CHECK(sign_with_precomp<P>(*pre, msg).sig == sig);

    // single-bit corruptions reject
    if (!msg.empty()) {
      auto bad_msg = msg;
      bad_msg[rng() % bad_msg.size()] ^= static_cast<uint8_t>(1u << (rng() % 8));
      CHECK_FALSE(verify<P>(pk, bad_msg, sig));
    }
    auto bad_sig = sig;
    bad_sig[rng() % bad_sig.size()] ^= static_cast<uint8_t>(1u << (rng() % 8));
    CHECK_FALSE(verify<P>(pk, msg, bad_sig));
  }
}

}  // namespace

TEST_CASE("sign/verify round trips, determinism and corruption rejection") {
  scheme_properties<kDilithium2>();
  scheme_properties<kDilithium3>();
  scheme_properties<kDilithium5>();
}

TEST_CASE("randomised rho-prime hook changes the signature but still verifies") {
  constexpr Params P = kDilithium2;
  std::mt19937_64 rng(602);
  const auto [pk, sk] = keygen<P>(seed_from(rng));
  const auto pre = make_precomp<P>(sk);
  const std::vector<uint8_t> msg{'m', 's', 'g'};
  CrhArray rhop;
  for (auto& b : rhop) b = static_cast<uint8_t>(rng());
  const auto randomized = sign_with_precomp<P>(*pre, msg, &rhop).sig;
  const auto deterministic = sign_with_precomp<P>(*pre, msg).sig;
  CHECK(randomized != deterministic);
  CHECK(verify<P>(pk, msg, randomized));
  CHECK(verify<P>(pk, msg, deterministic));
}

TEST_CASE("accepted nonce is minimal in its progression") {
  constexpr Params P = kDilithium2;
  std::mt19937_64 rng(603);
  const auto [pk, sk] = keygen<P>(seed_from(rng));
  const auto pre = make_precomp<P>(sk);
  for (int t = 0; t < 40; ++t) {
    std::vector<uint8_t> msg(16);
    for (auto& b : msg) b = static_cast<uint8_t>(rng());
    const CrhArray mu = message_digest<P>(*pre, msg);
    const CrhArray rhop = deterministic_rho_prime<P>(*pre, mu);
    const auto out = sign_with_precomp<P>(*pre, msg);
    // every attempt strictly below the accepted one must reject
    for (uint32_t a = 0; a + 1 < out.attempts; ++a) {
      CHECK_FALSE(sign_attempt<P>(*pre, mu, rhop, a * static_cast<uint32_t>(P.l)).accepted);
    }
    const uint32_t acc = (out.attempts - 1) * static_cast<uint32_t>(P.l);
    const auto r = sign_attempt<P>(*pre, mu, rhop, acc);
    CHECK(r.accepted);
    CHECK(pack_sig<P>(r.c_tilde, r.z, r.hints) == out.sig);
  }
}

TEST_CASE("forced rejection stages via corrupted bounds") {
  constexpr Params P = kDilithium2;
  std::mt19937_64 rng(604);
  const auto [pk, sk] = keygen<P>(seed_from(rng));
  const auto pre = make_precomp<P>(sk);
  const std::vector<uint8_t> msg{'x'};
  const CrhArray mu = message_digest<P>(*pre, msg);
  const CrhArray rhop = deterministic_rho_prime<P>(*pre, mu);

  // z bound of 1 rejects any nonzero z regardless of the attempt
  auto r = detail::sign_attempt_bounded<P>(pre.value(), mu, rhop, 0, 1, P.gamma2 - P.beta,
                                           P.gamma2);
  CHECK_FALSE(r.accepted);
  CHECK(r.stage == RejectStage::ZNorm);

  // at the accepting nonce, every genuine check passes, so a corrupted bound
  // pins exactly the stage it guards
  const uint32_t acc =
      (sign_with_precomp<P>(*pre, msg).attempts - 1) * static_cast<uint32_t>(P.l);
  r = detail::sign_attempt_bounded<P>(pre.value(), mu, rhop, acc, P.gamma1 - P.beta, 1, P.gamma2);
  CHECK_FALSE(r.accepted);
  CHECK(r.stage == RejectStage::R0Norm);

  r = detail::sign_attempt_bounded<P>(pre.value(), mu, rhop, acc, P.gamma1 - P.beta,
                                      P.gamma2 - P.beta, 1);
  CHECK_FALSE(r.accepted);
  CHECK(r.stage == RejectStage::VtNorm);
}

TEST_CASE("accepted attempt assembles to a verifying signature") {
  constexpr Params P = kDilithium3;
  std::mt19937_64 rng(605);
  const auto [pk, sk] = keygen<P>(seed_from(rng));
  const auto pre = make_precomp<P>(sk);
  const std::vector<uint8_t> msg{'a', 'b', 'c'};
  const CrhArray mu = message_digest<P>(*pre, msg);
  const CrhArray rhop = deterministic_rho_prime<P>(*pre, mu);
  for (uint32_t attempt = 0; attempt < kMaxSignAttempts; ++attempt) {
    const auto r = sign_attempt<P>(*pre, mu, rhop, attempt * static_cast<uint32_t>(P.l));
    if (!r.accepted) continue;
    CHECK(hint_weight(r.hints) <= P.omega);
    CHECK_FALSE(chknorm_vec(r.z, P.gamma1 - P.beta));
    CHECK(verify<P>(pk, msg, pack_sig<P>(r.c_tilde, r.z, r.hints)));
    return;
  }
  FAIL("no accepting attempt found");
}

TEST_CASE("malformed keys are rejected") {
  constexpr Params P = kDilithium2;
  std::vector<uint8_t> short_sk(P.sk_bytes() - 1, 0);
  CHECK_FALSE(make_precomp<P>(short_sk).has_value());
  std::vector<uint8_t> short_pk(P.pk_bytes() + 1, 0);
  std::vector<uint8_t> sig(P.sig_bytes(), 0);
  CHECK_FALSE(verify<P>(short_pk, sig, sig));
}
