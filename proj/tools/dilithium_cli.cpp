// Command-line front end: key generation, signing, verification, batch
// modes, and the benchmark/sensitivity harness around the batch engine.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "dilithium/dilithium.hpp"

namespace fs = std::filesystem;
using namespace dilithium;

namespace {

constexpr const char* kCsvHeader =
    "schema,mode,op,level,phi,psi,workers,streams,reps,"
    "throughput_ops_s,mean_latency_us,attempts_mean";
constexpr int kCsvSchema = 1;

using Bytes = std::vector<uint8_t>;

std::optional<Bytes> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return data;
}

bool write_file(const std::string& path, std::span<const uint8_t> data, bool hex_mode) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return false;
  if (hex_mode) {
    static const char* digits = "0123456789abcdef";
    std::string text;
    text.reserve(2 * data.size() + 1);
    for (uint8_t b : data) {
      text.push_back(digits[b >> 4]);
      text.push_back(digits[b & 0xF]);
    }
    text.push_back('\n');
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
  } else {
    out.write(reinterpret_cast<const char*>(data.data()),
              static_cast<std::streamsize>(data.size()));
  }
  return static_cast<bool>(out);
}

int hex_nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::optional<Bytes> decode_hex(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
    text.remove_suffix(1);
  if (text.size() % 2 != 0) return std::nullopt;
  Bytes out(text.size() / 2);
  for (size_t i = 0; i < out.size(); ++i) {
    const int hi = hex_nibble(text[2 * i]);
    const int lo = hex_nibble(text[2 * i + 1]);
    if (hi < 0 || lo < 0) return std::nullopt;
    out[i] = static_cast<uint8_t>((hi << 4) | lo);
  }
  return out;
}

// Key/signature files may be raw bytes or the hex text this tool emits with
// --out-format hex; the expected object length disambiguates.
std::optional<Bytes> read_object(const std::string& path, size_t expected_len) {
  auto raw = read_file(path);
  if (!raw) return std::nullopt;
  if (raw->size() == expected_len) return raw;
  auto hex = decode_hex(std::string_view(reinterpret_cast<const char*>(raw->data()), raw->size()));
  if (hex && hex->size() == expected_len) return hex;
  return std::nullopt;
}

SeedArray random_seed() {
  std::random_device rd;
  SeedArray s;
  for (size_t i = 0; i < s.size(); i += 4) {
    const uint32_t w = rd();
    for (size_t j = 0; j < 4; ++j) s[i + j] = static_cast<uint8_t>(w >> (8 * j));
  }
  return s;
}

std::optional<SeedArray> parse_seed(const std::string& hex) {
  const auto bytes = decode_hex(hex);
  if (!bytes || bytes->size() != kSeedBytes) return std::nullopt;
  SeedArray s;
  std::copy(bytes->begin(), bytes->end(), s.begin());
  std::cerr << "warning: deterministic seed supplied; keys derived from it are for testing only\n";
  return s;
}

struct CliConfig {
  int level = 0;
  size_t phi = 1000;
  size_t psi = 0;  // 0 = engine default
  size_t workers = 1;
  size_t streams = 1;
  size_t reps = 5;
  std::string seed_hex;
  std::string out_format = "binary";
  std::string trace_path;
  bool hex() const { return out_format == "hex"; }
};

std::ofstream open_trace(const std::string& path) {
  std::ofstream out;
  if (!path.empty()) {
    out.open(path, std::ios::trunc);
    out << "stream,round,unfinished,assigned,speculative,idle_slots,newly_done\n";
  }
  return out;
}

// --- single-object commands --------------------------------------------------

int cmd_keygen(const CliConfig& cfg, const std::string& pk_path, const std::string& sk_path) {
  SeedArray zeta;
  if (!cfg.seed_hex.empty()) {
    auto s = parse_seed(cfg.seed_hex);
    if (!s) {
      std::cerr << "error: --seed must be " << 2 * kSeedBytes << " hex characters\n";
      return 2;
    }
    zeta = *s;
  } else {
    zeta = random_seed();
  }
  int rc = 2;
  with_params(cfg.level, [&](auto tag) {
    constexpr Params P = decltype(tag)::value;
    const auto [pk, sk] = keygen<P>(zeta);
    if (!write_file(pk_path, pk, cfg.hex()) || !write_file(sk_path, sk, cfg.hex())) {
      std::cerr << "error: cannot write key files\n";
      rc = 2;
      return;
    }
    rc = 0;
  });
  return rc;
}

int cmd_sign(const CliConfig& cfg, const std::string& sk_path, const std::string& msg_path,
             const std::string& sig_path) {
  int rc = 2;
  with_params(cfg.level, [&](auto tag) {
    constexpr Params P = decltype(tag)::value;
    const auto sk = read_object(sk_path, P.sk_bytes());
    const auto msg = read_file(msg_path);
    if (!sk || !msg) {
      std::cerr << "error: cannot read secret key or message\n";
      return;
    }
    const auto pre = make_precomp<P>(*sk);
    if (!pre) {
      std::cerr << "error: malformed secret key\n";
      return;
    }
    const auto sig = sign_with_precomp<P>(*pre, *msg).sig;
    rc = write_file(sig_path, sig, cfg.hex()) ? 0 : 2;
    if (rc != 0) std::cerr << "error: cannot write signature\n";
  });
  return rc;
}

int cmd_verify(const CliConfig& cfg, const std::string& pk_path, const std::string& msg_path,
               const std::string& sig_path) {
  int rc = 2;
  with_params(cfg.level, [&](auto tag) {
    constexpr Params P = decltype(tag)::value;
    const auto pk = read_object(pk_path, P.pk_bytes());
    const auto sig = read_object(sig_path, P.sig_bytes());
    const auto msg = read_file(msg_path);
    if (!pk || !sig || !msg) {
      std::cerr << "error: malformed or missing input file\n";
      return;
    }
    if (!unpack_sig<P>(*sig) || !unpack_pk<P>(*pk)) {
      std::cerr << "error: malformed key or signature encoding\n";
      return;
    }
    rc = verify<P>(*pk, *msg, *sig) ? 0 : 1;
    std::cout << (rc == 0 ? "accept\n" : "reject\n");
  });
  return rc;
}

// --- batch commands -----------------------------------------------------------

int cmd_batch_sign(const CliConfig& cfg, const std::string& sk_path, const std::string& out_dir,
                   const std::vector<std::string>& msg_paths) {
  int rc = 2;
  with_params(cfg.level, [&](auto tag) {
    constexpr Params P = decltype(tag)::value;
    const auto sk = read_object(sk_path, P.sk_bytes());
    if (!sk) {
      std::cerr << "error: cannot read secret key\n";
      return;
    }
    const auto pre = make_precomp<P>(*sk);
    if (!pre) {
      std::cerr << "error: malformed secret key\n";
      return;
    }
    std::vector<Bytes> msgs;
    for (const auto& p : msg_paths) {
      auto m = read_file(p);
      if (!m) {
        std::cerr << "error: cannot read " << p << "\n";
        return;
      }
      msgs.push_back(std::move(*m));
    }
    if (cfg.psi > msgs.size()) {
      std::cerr << "error: --psi must not exceed the number of messages\n";
      return;
    }
    std::vector<SignJob<P>> jobs;
    for (const auto& m : msgs) jobs.push_back({&*pre, m});

    auto trace = open_trace(cfg.trace_path);
    BatchConfig bc;
    bc.psi = cfg.psi;
    bc.workers = cfg.workers;
    if (trace.is_open()) {
      bc.trace = [&trace](const RoundTrace& t) {
        trace << 0 << ',' << t.round << ',' << t.unfinished << ',' << t.assigned << ','
              << t.speculative << ',' << t.idle_slots << ',' << t.newly_done << '\n';
      };
    }
    const auto sigs = batch_sign<P>(std::span<const SignJob<P>>(jobs), bc);
    fs::create_directories(out_dir);
    for (size_t i = 0; i < sigs.size(); ++i) {
      const auto name = fs::path(msg_paths[i]).filename().string() + ".sig";
      if (!write_file((fs::path(out_dir) / name).string(), sigs[i], cfg.hex())) {
        std::cerr << "error: cannot write " << name << "\n";
        return;
      }
    }
    rc = 0;
  });
  return rc;
}

int cmd_batch_verify(const CliConfig& cfg, const std::string& pk_path, const std::string& sig_dir,
                     const std::vector<std::string>& msg_paths) {
  int rc = 2;
  with_params(cfg.level, [&](auto tag) {
    constexpr Params P = decltype(tag)::value;
    const auto pk = read_object(pk_path, P.pk_bytes());
    if (!pk) {
      std::cerr << "error: cannot read public key\n";
      return;
    }
    std::vector<Bytes> msgs, sigs;
    for (const auto& p : msg_paths) {
      auto m = read_file(p);
      const auto sig_name = fs::path(p).filename().string() + ".sig";
      auto s = read_object((fs::path(sig_dir) / sig_name).string(), P.sig_bytes());
      if (!m) {
        std::cerr << "error: cannot read " << p << "\n";
        return;
      }
      msgs.push_back(std::move(*m));
      sigs.push_back(s ? std::move(*s) : Bytes{});  // missing sig -> reject below
    }
    std::vector<VerifyJob<P>> jobs;
    for (size_t i = 0; i < msgs.size(); ++i) jobs.push_back({*pk, msgs[i], sigs[i]});
    const auto flags = batch_verify<P>(std::span<const VerifyJob<P>>(jobs), cfg.workers);
    bool all = true;
    for (size_t i = 0; i < flags.size(); ++i) {
      std::cout << msg_paths[i] << ": " << (flags[i] ? "accept" : "reject") << "\n";
      all = all && flags[i];
    }
    rc = all ? 0 : 1;
  });
  return rc;
}

// --- benchmark harness --------------------------------------------------------

struct Measurement {
  double seconds = 0;
  double attempts_mean = 0;
};

// Runs `streams` independent engines over a partition of phi tasks and
// returns the wall time over all of them.
template <Params P>
Measurement timed_sign_batch(const SignPrecomp<P>& pre, const std::vector<Bytes>& msgs,
                             size_t psi, size_t workers, size_t streams,
                             std::ofstream* trace) {
  const size_t phi = msgs.size();
  std::vector<SignJob<P>> jobs(phi);
  for (size_t i = 0; i < phi; ++i) jobs[i] = {&pre, msgs[i]};

  std::vector<BatchStats> stats(streams);
  std::mutex trace_mu;
  const auto t0 = std::chrono::steady_clock::now();
  {
    std::vector<std::thread> threads;
    for (size_t s = 0; s < streams; ++s) {
      threads.emplace_back([&, s] {
        const size_t lo = phi * s / streams, hi = phi * (s + 1) / streams;
        if (lo == hi) return;
        BatchConfig bc;
        bc.psi = psi == 0 ? 0 : std::max<size_t>(1, std::min(psi, hi - lo));
        bc.workers = workers;
        if (trace && trace->is_open()) {
          bc.trace = [&, s](const RoundTrace& t) {
            std::lock_guard lk(trace_mu);
            *trace << s << ',' << t.round << ',' << t.unfinished << ',' << t.assigned << ','
                   << t.speculative << ',' << t.idle_slots << ',' << t.newly_done << '\n';
          };
        }
        batch_sign<P>(std::span<const SignJob<P>>(jobs).subspan(lo, hi - lo), bc, &stats[s]);
      });
    }
    for (auto& t : threads) t.join();
  }
  const auto t1 = std::chrono::steady_clock::now();
  uint64_t accepted = 0;
  for (const auto& st : stats) accepted += st.accepted_attempt_sum;
  return {std::chrono::duration<double>(t1 - t0).count(),
          static_cast<double>(accepted) / static_cast<double>(phi)};
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

void emit_row(const char* mode, const char* op, const CliConfig& cfg, size_t phi, size_t psi,
              size_t streams, double tput, double lat_us, double attempts) {
  std::cout << kCsvSchema << ',' << mode << ',' << op << ',' << cfg.level << ',' << phi << ','
            << psi << ',' << cfg.workers << ',' << streams << ',' << cfg.reps << ',' << tput
            << ',' << lat_us << ',' << attempts << "\n";
}

template <Params P>
void bench_level(const CliConfig& cfg, std::mt19937_64& rng, bool header) {
  SeedArray zeta;
  for (auto& b : zeta) b = static_cast<uint8_t>(rng());
  const auto [pk, sk] = keygen<P>(zeta);
  const auto pre = make_precomp<P>(sk);

  std::vector<Bytes> msgs(cfg.phi);
  for (auto& m : msgs) {
    m.resize(59);
    for (auto& b : m) b = static_cast<uint8_t>(rng());
  }

  if (header) std::cout << kCsvHeader << "\n";
  auto trace = open_trace(cfg.trace_path);

  // keygen
  {
    std::vector<SeedArray> seeds(cfg.phi);
    for (auto& s : seeds)
      for (auto& b : s) b = static_cast<uint8_t>(rng());
    std::vector<double> samples;
    for (size_t r = 0; r < cfg.reps; ++r) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto out = batch_keygen<P>(seeds, cfg.workers * cfg.streams);
      const auto t1 = std::chrono::steady_clock::now();
      (void)out;
      samples.push_back(std::chrono::duration<double>(t1 - t0).count());
    }
    const double sec = median(samples);
    emit_row("bench", "keygen", cfg, cfg.phi, 0, cfg.streams,
             static_cast<double>(cfg.phi) / sec, 1e6 * sec / static_cast<double>(cfg.phi), 0);
  }

  // sign
  double attempts_mean = 0;
  {
    std::vector<double> samples;
    for (size_t r = 0; r < cfg.reps; ++r) {
      const auto m =
          timed_sign_batch<P>(*pre, msgs, cfg.psi, cfg.workers, cfg.streams,
                              r == 0 ? &trace : nullptr);
      samples.push_back(m.seconds);
      attempts_mean = m.attempts_mean;
    }
    const double sec = median(samples);
    emit_row("bench", "sign", cfg, cfg.phi, cfg.psi, cfg.streams,
             static_cast<double>(cfg.phi) / sec, 1e6 * sec / static_cast<double>(cfg.phi),
             attempts_mean);
  }

  // verify
  {
    std::vector<SigBytes<P>> sigs(cfg.phi);
    std::vector<SignJob<P>> jobs(cfg.phi);
    for (size_t i = 0; i < cfg.phi; ++i) jobs[i] = {&*pre, msgs[i]};
    BatchConfig bc;
    bc.workers = cfg.workers * cfg.streams;
    auto signed_batch = batch_sign<P>(std::span<const SignJob<P>>(jobs), bc);
    std::vector<VerifyJob<P>> vjobs(cfg.phi);
    for (size_t i = 0; i < cfg.phi; ++i) vjobs[i] = {pk, msgs[i], signed_batch[i]};
    std::vector<double> samples;
    for (size_t r = 0; r < cfg.reps; ++r) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto flags = batch_verify<P>(std::span<const VerifyJob<P>>(vjobs),
                                         cfg.workers * cfg.streams);
      const auto t1 = std::chrono::steady_clock::now();
      for (auto f : flags)
        if (!f) std::cerr << "warning: bench verify rejected an honest signature\n";
      samples.push_back(std::chrono::duration<double>(t1 - t0).count());
    }
    const double sec = median(samples);
    emit_row("bench", "verify", cfg, cfg.phi, 0, cfg.streams,
             static_cast<double>(cfg.phi) / sec, 1e6 * sec / static_cast<double>(cfg.phi), 0);
  }
}

int cmd_bench(const CliConfig& cfg) {
  std::mt19937_64 rng(cfg.seed_hex.empty() ? std::random_device{}()
                                           : std::hash<std::string>{}(cfg.seed_hex));
  int rc = 2;
  with_params(cfg.level, [&](auto tag) {
    constexpr Params P = decltype(tag)::value;
    bench_level<P>(cfg, rng, true);
    rc = 0;
  });
  return rc;
}

template <Params P>
void sweep_level(const CliConfig& cfg, size_t psi_min, size_t psi_max, size_t psi_steps,
                 size_t streams_max, std::mt19937_64& rng) {
  SeedArray zeta;
  for (auto& b : zeta) b = static_cast<uint8_t>(rng());
  const auto [pk, sk] = keygen<P>(zeta);
  (void)pk;
  const auto pre = make_precomp<P>(sk);
  std::vector<Bytes> msgs(cfg.phi);
  for (auto& m : msgs) {
    m.resize(59);
    for (auto& b : m) b = static_cast<uint8_t>(rng());
  }
  std::cout << kCsvHeader << "\n";

  auto run_point = [&](const char* mode, const std::vector<Bytes>& batch, size_t psi,
                       size_t streams) {
    std::vector<double> samples;
    double attempts = 0;
    for (size_t r = 0; r < cfg.reps; ++r) {
      const auto m = timed_sign_batch<P>(*pre, batch, psi, cfg.workers, streams, nullptr);
      samples.push_back(m.seconds);
      attempts = m.attempts_mean;
    }
    const double sec = median(samples);
    emit_row(mode, "sign", cfg, batch.size(), psi, streams,
             static_cast<double>(batch.size()) / sec,
             1e6 * sec / static_cast<double>(batch.size()), attempts);
  };

  // throughput vs psi at fixed phi
  psi_max = std::min(psi_max == 0 ? cfg.phi : psi_max, cfg.phi);
  psi_min = std::max<size_t>(1, std::min(psi_min, psi_max));
  const size_t steps = std::max<size_t>(2, psi_steps);
  for (size_t s = 0; s < steps; ++s) {
    const size_t psi = psi_min + (psi_max - psi_min) * s / (steps - 1);
    run_point("sweep-psi", msgs, psi, 1);
  }

  // throughput vs batch size at the engine's default psi
  for (size_t batch = std::max<size_t>(1, cfg.phi / 16); batch <= cfg.phi; batch *= 2) {
    std::vector<Bytes> sub(msgs.begin(), msgs.begin() + static_cast<long>(batch));
    run_point("sweep-batch", sub, 0, 1);
    if (batch == cfg.phi) break;
    if (batch * 2 > cfg.phi && batch != cfg.phi) {
      std::vector<Bytes> full(msgs);
      run_point("sweep-batch", full, 0, 1);
      break;
    }
  }

  // throughput vs stream count at full phi
  for (size_t s = 1; s <= streams_max; s *= 2) run_point("sweep-streams", msgs, cfg.psi, s);
}

int cmd_sweep(const CliConfig& cfg, size_t psi_min, size_t psi_max, size_t psi_steps,
              size_t streams_max) {
  std::mt19937_64 rng(cfg.seed_hex.empty() ? std::random_device{}()
                                           : std::hash<std::string>{}(cfg.seed_hex));
  int rc = 2;
  with_params(cfg.level, [&](auto tag) {
    constexpr Params P = decltype(tag)::value;
    sweep_level<P>(cfg, psi_min, psi_max, psi_steps, streams_max, rng);
    rc = 0;
  });
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dilithium signatures with a batch signing engine"};
  app.require_subcommand(1);

  CliConfig cfg;
  std::string pk_path, sk_path, msg_path, sig_path, out_dir, sig_dir;
  std::vector<std::string> msg_paths;
  size_t psi_min = 1, psi_max = 0, psi_steps = 6, streams_max = 4;

  auto add_common = [&](CLI::App* sub, bool needs_level = true) {
    auto* lvl = sub->add_option("--level", cfg.level, "security level (2, 3 or 5)");
    lvl->check(CLI::IsMember({2, 3, 5}));
    if (needs_level) lvl->required();
    sub->add_option("--out-format", cfg.out_format, "binary or hex output files")
        ->check(CLI::IsMember({"binary", "hex"}));
    sub->add_option("--seed", cfg.seed_hex, "32-byte hex seed (testing only)");
  };

  auto* kg = app.add_subcommand("keygen", "generate a key pair");
  add_common(kg);
  kg->add_option("--pk", pk_path, "public key output path")->required();
  kg->add_option("--sk", sk_path, "secret key output path")->required();

  auto* sg = app.add_subcommand("sign", "sign one message file");
  add_common(sg);
  sg->add_option("--sk", sk_path, "secret key path")->required();
  sg->add_option("--in", msg_path, "message path")->required();
  sg->add_option("--out", sig_path, "signature output path")->required();

  auto* vf = app.add_subcommand("verify", "verify one signature (exit 0 accept, 1 reject, 2 bad input)");
  add_common(vf);
  vf->add_option("--pk", pk_path, "public key path")->required();
  vf->add_option("--in", msg_path, "message path")->required();
  vf->add_option("--sig", sig_path, "signature path")->required();

  auto* bs = app.add_subcommand("batch-sign", "sign many message files through the batch engine");
  add_common(bs);
  bs->add_option("--sk", sk_path, "secret key path")->required();
  bs->add_option("--out-dir", out_dir, "directory for <msg>.sig outputs")->required();
  bs->add_option("--psi", cfg.psi, "concurrent attempt slots (default: 16*workers)");
  bs->add_option("--workers", cfg.workers, "worker threads");
  bs->add_option("--trace", cfg.trace_path, "write per-round scheduler trace CSV here");
  bs->add_option("messages", msg_paths, "message files")->required()->expected(-1);

  auto* bv = app.add_subcommand("batch-verify", "verify many signatures");
  add_common(bv);
  bv->add_option("--pk", pk_path, "public key path")->required();
  bv->add_option("--sig-dir", sig_dir, "directory holding <msg>.sig files")->required();
  bv->add_option("--workers", cfg.workers, "worker threads");
  bv->add_option("messages", msg_paths, "message files")->required()->expected(-1);

  auto* bench = app.add_subcommand("bench", "measure keygen/sign/verify throughput (CSV on stdout)");
  add_common(bench);
  bench->add_option("--phi", cfg.phi, "batch size");
  bench->add_option("--psi", cfg.psi, "concurrent attempt slots (default: 16*workers)");
  bench->add_option("--workers", cfg.workers, "worker threads per stream");
  bench->add_option("--streams", cfg.streams, "independent engines over a task partition");
  bench->add_option("--reps", cfg.reps, "repetitions; medians are reported");
  bench->add_option("--trace", cfg.trace_path, "write per-round scheduler trace CSV here");

  auto* sweep = app.add_subcommand("sweep", "sensitivity sweep over psi, batch size and streams");
  add_common(sweep);
  sweep->add_option("--phi", cfg.phi, "batch size");
  sweep->add_option("--workers", cfg.workers, "worker threads per stream");
  sweep->add_option("--reps", cfg.reps, "repetitions per grid point");
  sweep->add_option("--psi-min", psi_min, "smallest psi");
  sweep->add_option("--psi-max", psi_max, "largest psi (default: phi)");
  sweep->add_option("--psi-steps", psi_steps, "grid points between psi-min and psi-max");
  sweep->add_option("--streams-max", streams_max, "sweep streams 1,2,4.. up to this");

  CLI11_PARSE(app, argc, argv);

  if (cfg.psi != 0 && cfg.psi > cfg.phi && (bench->parsed() || sweep->parsed())) {
    std::cerr << "error: --psi must not exceed --phi\n";
    return 2;
  }

  try {
    if (kg->parsed()) return cmd_keygen(cfg, pk_path, sk_path);
    if (sg->parsed()) return cmd_sign(cfg, sk_path, msg_path, sig_path);
    if (vf->parsed()) return cmd_verify(cfg, pk_path, msg_path, sig_path);
    if (bs->parsed()) return cmd_batch_sign(cfg, sk_path, out_dir, msg_paths);
    if (bv->parsed()) return cmd_batch_verify(cfg, pk_path, sig_dir, msg_paths);
    if (bench->parsed()) return cmd_bench(cfg);
    if (sweep->parsed()) return cmd_sweep(cfg, psi_min, psi_max, psi_steps, streams_max);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
