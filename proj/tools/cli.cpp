#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>

#include <CLI11.hpp>

#include "cryptsteg/cryptsteg.hpp"

namespace cryptsteg::cli {
namespace {

constexpr std::size_t kDefaultTestBits = 1'000'000;
constexpr std::size_t kMinTestBits = 10'000;
constexpr double kZLimit = 4.0;

struct Options {
  std::string cover;
  std::string stego;
  std::string out;
  std::optional<std::string> message;
  std::optional<std::string> message_file;
  std::string crypto_key;
  std::string stego_key;
  int k = 1;
  std::size_t bits = kDefaultTestBits;
  bool json = false;
};

// A usage problem detected after CLI11 parsing.
struct UsageError {
  std::string message;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidKey:
    case ErrorCode::InvalidParameter:
      return kUsage;
    case ErrorCode::MalformedHeader:
      return kExtractionFailed;
    default:
      return kCapacityOrFormat;
  }
}

MessageBytes read_stream(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

MessageBytes read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::IoError, "cannot open " + path);
  return read_stream(f);
}

void write_file(const std::string& path, const MessageBytes& data) {
  std::ofstream f(path, std::ios::binary);
  f.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!f) throw Error(ErrorCode::IoError, "cannot write " + path);
}

// Keys are parsed here rather than by CLI11 validators so that no error
// message ever repeats the offending value.
CryptoKey crypto_key_from(const std::string& text) {
  try {
    return CryptoKey::parse(text);
  } catch (const Error&) {
    throw Error(ErrorCode::InvalidKey,
                "invalid crypto-key: expected 0. followed by 1-17 digits, strictly between 0 and 1");
  }
}

StegoKey stego_key_from(const std::string& text) {
  try {
    return StegoKey::parse(text);
  } catch (const Error&) {
    throw Error(ErrorCode::InvalidKey, "invalid stego-key: expected 1-16 lowercase hex digits");
  }
}

void warn_about(const LoadNotes& notes, const std::string& path, std::ostream& err) {
  if (notes.alpha_stripped) err << "warning: " << path << ": alpha channel discarded\n";
  if (notes.palette_expanded) err << "warning: " << path << ": palette expanded to RGB\n";
}

std::string percent(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f%%", v);
  return buf;
}

int cmd_embed(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  if (o.message && o.message_file) throw UsageError{"use either --message or --message-file"};
  const CryptoKey ck = crypto_key_from(o.crypto_key);
  const StegoKey sk = stego_key_from(o.stego_key);
  const StegoParams params(o.k);

  MessageBytes plaintext;
  if (o.message) {
    plaintext.assign(o.message->begin(), o.message->end());  // argv text is already UTF-8
  } else if (o.message_file && *o.message_file != "-") {
    plaintext = read_file(*o.message_file);
  } else {
    plaintext = read_stream(in);
  }

  LoadNotes notes;
  const ImageBuffer cover = load_image(o.cover, &notes);
  warn_about(notes, o.cover, err);

  const std::uint64_t available = capacity(cover, params);
  if (plaintext.size() > available) {
    err << "error: message needs " << plaintext.size() << " bytes but the cover holds "
        << available << " bytes at k=" << params.k() << "\n";
    return kCapacityOrFormat;
  }

  const ImageBuffer stego = embed(cover, encrypt(plaintext, ck), sk, params);
  save_image(stego, o.out);

  const DistortionReport d = distortion(cover, stego);
  const double used = available == 0 ? 0.0 : 100.0 * static_cast<double>(plaintext.size()) /
                                                  static_cast<double>(available);
  out << "stego=" << o.out << "\n"
      << "payload_bytes=" << plaintext.size() << "\n"
      << "capacity_bytes=" << available << "\n"
      << "capacity_used=" << percent(used) << "\n"
      << "slots_used=" << slots_needed(plaintext.size(), params) << "\n"
      << "psnr_db=" << (d.identical() ? std::string("inf") : std::to_string(d.psnr_db)) << "\n"
      << "changed_bytes=" << d.changed_bytes << "\n";
  return kOk;
}

int cmd_extract(const Options& o, std::ostream& out, std::ostream& err) {
  const CryptoKey ck = crypto_key_from(o.crypto_key);
  const StegoKey sk = stego_key_from(o.stego_key);
  const StegoParams params(o.k);

  LoadNotes notes;
  const ImageBuffer stego = load_image(o.stego, &notes);
  warn_about(notes, o.stego, err);

  MessageBytes ciphertext;
  try {
    ciphertext = extract(stego, sk, params);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::MalformedHeader) throw;
    err << "error: no payload found (wrong key, wrong k, or not a stego image)\n";
    return kExtractionFailed;
  }
  const MessageBytes plaintext = decrypt(ciphertext, ck);
  if (o.out.empty()) {
    out.write(reinterpret_cast<const char*>(plaintext.data()),
              static_cast<std::streamsize>(plaintext.size()));
    out.flush();
  } else {
    write_file(o.out, plaintext);
  }
  return kOk;
}

int cmd_analyze(const Options& o, std::ostream& out, std::ostream& err) {
  LoadNotes notes;
  const ImageBuffer cover = load_image(o.cover, &notes);
  warn_about(notes, o.cover, err);
  const ImageBuffer stego = load_image(o.stego, &notes);
  warn_about(notes, o.stego, err);
  const DistortionReport d = distortion(cover, stego);
  out << (o.json ? to_json(d) + "\n" : to_key_value(d));
  return kOk;
}

int cmd_keystream_test(const Options& o, std::ostream& out) {
  if (o.bits < kMinTestBits) {
    throw UsageError{"--bits must be at least " + std::to_string(kMinTestBits)};
  }
  const CryptoKey ck = crypto_key_from(o.crypto_key);
  const RandomnessReport r = randomness_report(keystream(ck, o.bits));
  const bool pass = std::abs(r.monobit_z) <= kZLimit && r.runs_z && std::abs(*r.runs_z) <= kZLimit;
  if (o.json) {
    out << to_json(r) << "\n";
  } else {
    out << to_key_value(r) << "result=" << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kOk : kTestFailed;
}

void add_keys(CLI::App* cmd, Options& o) {
  cmd->add_option("--crypto-key", o.crypto_key, "cipher key, 0.<1-17 digits>")
      ->envname(kCryptoKeyEnv)
      ->required();
  cmd->add_option("--stego-key", o.stego_key, "embedding key, 1-16 lowercase hex digits")
      ->envname(kStegoKeyEnv)
      ->required();
  cmd->add_option("--k", o.k, "low bits used per byte slot")
      ->check(CLI::Range(1, 4))
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Hide chaos-encrypted messages in the low bits of lossless images"};
  app.name(args.empty() ? "cryptsteg" : args.front());
  app.require_subcommand(1);
  Options o;

  auto* embed_cmd = app.add_subcommand("embed", "encrypt a message and hide it in a cover image");
  embed_cmd->add_option("--cover", o.cover, "cover image (PNG or BMP)")->required();
  embed_cmd->add_option("--message", o.message, "message text");
  embed_cmd->add_option("--message-file", o.message_file, "message file, - for stdin");
  add_keys(embed_cmd, o);
  embed_cmd->add_option("--out", o.out, "stego image to write (always PNG)")->required();

  auto* extract_cmd = app.add_subcommand("extract", "recover and decrypt a hidden message");
  extract_cmd->add_option("--stego", o.stego, "stego image")->required();
  add_keys(extract_cmd, o);
  extract_cmd->add_option("--out", o.out, "write the message here instead of stdout");

  auto* analyze_cmd = app.add_subcommand("analyze", "distortion between a cover and a stego image");
  analyze_cmd->add_option("--cover", o.cover, "cover image")->required();
  analyze_cmd->add_option("--stego", o.stego, "stego image")->required();
  analyze_cmd->add_flag("--json", o.json, "emit one JSON object");

  auto* ks_cmd = app.add_subcommand("keystream-test", "monobit and runs tests on the keystream");
  ks_cmd->add_option("--crypto-key", o.crypto_key, "cipher key, 0.<1-17 digits>")
      ->envname(kCryptoKeyEnv)
      ->required();
  ks_cmd->add_option("--bits", o.bits, "number of keystream bits")->capture_default_str();
  ks_cmd->add_flag("--json", o.json, "emit one JSON object");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (embed_cmd->parsed()) return cmd_embed(o, in, out, err);
    if (extract_cmd->parsed()) return cmd_extract(o, out, err);
    if (analyze_cmd->parsed()) return cmd_analyze(o, out, err);
    return cmd_keystream_test(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.message << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

}  // namespace cryptsteg::cli
