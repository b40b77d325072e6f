// Copyright 2026 The hecc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hecc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <sstream>

#include "hecc/codec.hpp"
#include "hecc/oracle.hpp"
#include "hecc/protocols.hpp"

namespace hecc::cli {

namespace {

namespace fs = std::filesystem;

class IoError : public Error {
 public:
  using Error::Error;
};

Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("error while reading '" + path + "'");
  return data;
}

std::string read_text(const std::string& path) {
  const Bytes b = read_file(path);
  return std::string(b.begin(), b.end());
}

void write_file(const std::string& path, std::span<const std::uint8_t> data) {
  const fs::path target(path);
  std::random_device rd;
  const fs::path tmp = target.string() + ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + path + "'");
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    out.flush();
    if (!out) {
      out.close();
      fs::remove(tmp);
      throw IoError("error while writing '" + path + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw IoError("cannot write '" + path + "': " + ec.message());
  }
}

void write_text(const std::string& path, const std::string& text) { write_file(path, as_bytes(text)); }

DomainParams load_domain(const std::string& path) { return codec::read_domain_file(read_text(path)); }

KeyPair load_secret(const std::string& path, const DomainParams& dp) {
  return keypair_from_secret(dp, codec::decode_secret_key(read_file(path), dp));
}

MumfordDivisor load_public(const std::string& path, const DomainParams& dp) {
  return codec::decode_public_key(read_file(path), dp);
}

std::string format_polynomial(const Polynomial& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (int i = a.degree(); i >= 0; --i) {
    const BigInt c = a.coefficient(static_cast<std::size_t>(i));
    if (sgn(c) == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0 || c != 1) out += to_decimal(c);
    if (i > 0 && c != 1) out += "*";
    if (i > 0) out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::vector<BigInt> parse_coefficients(const std::string& text) {
  std::vector<BigInt> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_decimal(item));
  if (out.size() == 1 && sgn(out[0]) == 0) out.clear();
  return out;
}

// -- subcommands -------------------------------------------------------------

struct Paths {
  std::string domain, secret, public_key, peer, in, out, sig, out_secret, out_public, workdir;
  bool deterministic = false;
};

int cmd_keygen(const Paths& a, std::ostream& out) {
  const DomainParams dp = load_domain(a.domain);
  SystemScalarSource rng;
  const KeyPair kp = keygen(dp, rng);
  write_file(a.out_secret, codec::encode_secret_key(kp.secret, dp));
  write_file(a.out_public, codec::encode_public_key(kp.public_key));
  out << "wrote secret key " << a.out_secret << " and public key " << a.out_public << "\n";
  return kOk;
}

int cmd_dh(const Paths& a, std::ostream& out) {
  const DomainParams dp = load_domain(a.domain);
  const KeyPair own = load_secret(a.secret, dp);
  const SharedSecret s = dh_shared(own, load_public(a.peer, dp), dp);
  write_file(a.out, codec::encode_divisor(s.value));
  out << "wrote shared secret " << a.out << (s.degenerate ? " (degenerate: peer sent the identity)" : "") << "\n";
  return kOk;
}

int cmd_encrypt(const Paths& a, std::ostream& out) {
  const DomainParams dp = load_domain(a.domain);
  const MumfordDivisor peer = load_public(a.public_key, dp);
  const Bytes msg = read_file(a.in);
  SystemScalarSource rng;
  const Ciphertext ct = elgamal_encrypt_bytes(msg, peer, dp, rng);
  write_file(a.out, codec::encode_ciphertext(ct));
  out << "encrypted " << msg.size() << " bytes into " << ct.chunks.size() << " blocks -> " << a.out << "\n";
  return kOk;
}

int cmd_decrypt(const Paths& a, std::ostream& out) {
  const DomainParams dp = load_domain(a.domain);
  const KeyPair own = load_secret(a.secret, dp);
  const Ciphertext ct = codec::decode_ciphertext(read_file(a.in), dp);
  const Bytes msg = elgamal_decrypt_bytes(ct, own, dp);
  write_file(a.out, msg);
  out << "decrypted " << msg.size() << " bytes -> " << a.out << "\n";
  return kOk;
}

int cmd_sign(const Paths& a, std::ostream& out) {
  const DomainParams dp = load_domain(a.domain);
  const KeyPair own = load_secret(a.secret, dp);
  const Bytes msg = read_file(a.in);
  SystemScalarSource rng;
  const Signature sig = a.deterministic ? sign(msg, own, dp) : sign(msg, own, dp, rng);
  write_file(a.out, codec::encode_signature(sig, dp));
  out << "wrote signature " << a.out << "\n";
  return kOk;
}

int cmd_verify(const Paths& a, std::ostream& out) {
  const DomainParams dp = load_domain(a.domain);
  const MumfordDivisor pk = load_public(a.public_key, dp);
  const Bytes msg = read_file(a.in);
  const Signature sig = codec::decode_signature(read_file(a.sig), dp);
  const VerifyResult res = verify(msg, sig, pk, dp);
  if (res.accepted()) {
    out << "ACCEPT\n";
    return kOk;
  }
  out << "REJECT: " << status_name(res.status) << "\n";
  return kRejected;
}

int cmd_curve_info(const Paths& a, std::ostream& out) {
  const DomainParams dp = load_domain(a.domain);
  const CurveParams& c = dp.curve();
  out << "p = " << to_decimal(c.p()) << " (" << bit_length(c.p()) << " bits)\n";
  out << "genus = " << c.genus() << "\n";
  out << "f = " << format_polynomial(c.f()) << "\n";
  out << "h = " << format_polynomial(c.h()) << "\n";
  out << "r = " << to_decimal(dp.order()) << " (" << bit_length(dp.order()) << " bits)\n";
  out << "R = " << to_hex(codec::encode_divisor(dp.base())) << "\n";
  const auto [lo, hi] = oracle::hasse_weil_interval(c.p(), c.genus());
  out << "Hasse-Weil interval = [" << to_decimal(lo) << ", " << to_decimal(hi) << "]\n";
  try {
    const std::uint64_t n = oracle::group_order_bruteforce(c);
    const bool inside = lo <= from_u64(n) && from_u64(n) <= hi;
    const bool divides = n % to_u64(dp.order()) == 0;
    out << "#J (enumerated) = " << n << (inside ? ", inside" : ", OUTSIDE") << " the interval; r "
        << (divides ? "divides" : "does NOT divide") << " #J\n";
  } catch (const GuardError&) {
    out << "#J (enumerated) = skipped, curve too large for exhaustive enumeration\n";
  }
  return kOk;
}

int cmd_exchange_demo(const Paths& a, std::ostream& out) {
  const DomainParams dp = load_domain(a.domain);
  const Bytes doc = read_file(a.in);
  const fs::path w(a.workdir);
  std::error_code ec;
  fs::create_directories(w, ec);
  if (ec) throw IoError("cannot create '" + a.workdir + "': " + ec.message());
  const auto at = [&](const char* name) { return (w / name).string(); };

  const CurveParams& c = dp.curve();
  out << "[setup] genus " << c.genus() << " curve over a " << bit_length(c.p()) << "-bit prime field, "
      << bit_length(dp.order()) << "-bit subgroup order\n";

  SystemScalarSource rng;
  const KeyPair alice = keygen(dp, rng);
  const KeyPair bob = keygen(dp, rng);
  write_file(at("a.sk"), codec::encode_secret_key(alice.secret, dp));
  write_file(at("a.pk"), codec::encode_public_key(alice.public_key));
  write_file(at("b.sk"), codec::encode_secret_key(bob.secret, dp));
  write_file(at("b.pk"), codec::encode_public_key(bob.public_key));
  out << "[A] key pair -> a.sk, a.pk\n";
  out << "[B] key pair -> b.sk, b.pk\n";

  const Signature sig = sign(doc, alice, dp);
  const Bytes sig_bytes = codec::encode_signature(sig, dp);
  write_file(at("document.sig"), sig_bytes);
  out << "[A] signed the " << doc.size() << "-byte document with a.sk -> document.sig\n";

  Bytes payload = sig_bytes;
  payload.insert(payload.end(), doc.begin(), doc.end());
  const Ciphertext ct = elgamal_encrypt_bytes(payload, bob.public_key, dp, rng);
  const Bytes ct_bytes = codec::encode_ciphertext(ct);
  write_file(at("message.ct"), ct_bytes);
  out << "[A] encrypted signature || document for b.pk -> message.ct (" << ct.chunks.size() << " blocks, "
      << ct_bytes.size() << " bytes)\n";

  out << "[B] order: decrypt first, then verify (the signature travels inside the ciphertext)\n";
  const Bytes received = elgamal_decrypt_bytes(codec::decode_ciphertext(read_file(at("message.ct")), dp), bob, dp);
  codec::ByteReader reader(received, codec::ArtifactKind::signature);
  const Signature got_sig = codec::read_signature(reader, dp);
  const auto rest = reader.get(reader.remaining());
  const Bytes recovered(rest.begin(), rest.end());
  out << "[B] decrypted message.ct with b.sk: " << recovered.size() << "-byte document plus signature\n";

  const VerifyResult res = verify(recovered, got_sig, alice.public_key, dp);
  if (!res.accepted()) {
    out << "[B] signature check with a.pk: REJECT (" << status_name(res.status) << ")\nREJECTED\n";
    return kRejected;
  }
  out << "[B] signature check with a.pk: ACCEPT\n";
  const std::string recovered_name = "recovered_" + fs::path(a.in).filename().string();
  write_file((w / recovered_name).string(), recovered);
  out << "[B] recovered document -> " << recovered_name << " (" << (recovered == doc ? "identical to" : "DIFFERS from")
      << " the input)\n";
  out << "VERIFIED\n";
  return kOk;
}

struct TestDomainArgs {
  std::string out, p, f, h = "0";
  int genus = 2;
};

int cmd_make_test_domain(const TestDomainArgs& a, std::ostream& out) {
  const BigInt p = parse_decimal(a.p);
  const CurveParams c = make_curve(p, a.genus, parse_coefficients(a.f), parse_coefficients(a.h));
  const oracle::EnumeratedGroup group = oracle::enumerate_reduced_divisors(c);
  const DomainParams dp = oracle::make_prime_order_domain(group);
  write_text(a.out, "# #J = " + std::to_string(group.order()) + " by exhaustive enumeration\n" +
                        codec::write_domain_file(dp));
  out << "#J = " << group.order() << ", r = " << to_decimal(dp.order()) << " -> " << a.out << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hyperelliptic-curve Diffie-Hellman, ElGamal and signatures", "hecc"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(0, 1);
  Paths p;
  TestDomainArgs t;

  auto* make = app.add_option("--make-test-domain", t.out, "Write a test domain for a tiny curve")->group("");
  app.add_option("--p", t.p)->group("");
  app.add_option("--f", t.f)->group("");
  app.add_option("--h", t.h)->group("");
  app.add_option("--genus", t.genus)->group("");

  const auto domain = [&](CLI::App* sub) {
    sub->add_option("--domain", p.domain, "Domain parameter file")->required();
  };

  auto* keygen_cmd = app.add_subcommand("keygen", "Generate a key pair");
  domain(keygen_cmd);
  keygen_cmd->add_option("--out-secret", p.out_secret, "Secret key output")->required();
  keygen_cmd->add_option("--out-public", p.out_public, "Public key output")->required();

  auto* dh_cmd = app.add_subcommand("dh", "Compute a Diffie-Hellman shared secret");
  domain(dh_cmd);
  dh_cmd->add_option("--secret", p.secret, "Own secret key")->required();
  dh_cmd->add_option("--peer", p.peer, "Peer public key")->required();
  dh_cmd->add_option("--out", p.out, "Shared secret output")->required();

  auto* enc_cmd = app.add_subcommand("encrypt", "ElGamal-encrypt a file");
  domain(enc_cmd);
  enc_cmd->add_option("--public", p.public_key, "Recipient public key")->required();
  enc_cmd->add_option("--in", p.in, "Plaintext")->required();
  enc_cmd->add_option("--out", p.out, "Ciphertext output")->required();

  auto* dec_cmd = app.add_subcommand("decrypt", "Decrypt an ElGamal ciphertext");
  domain(dec_cmd);
  dec_cmd->add_option("--secret", p.secret, "Own secret key")->required();
  dec_cmd->add_option("--in", p.in, "Ciphertext")->required();
  dec_cmd->add_option("--out", p.out, "Plaintext output")->required();

  auto* sign_cmd = app.add_subcommand("sign", "Sign a file");
  domain(sign_cmd);
  sign_cmd->add_option("--secret", p.secret, "Signer secret key")->required();
  sign_cmd->add_option("--in", p.in, "Message")->required();
  sign_cmd->add_option("--out", p.out, "Signature output")->required();
  sign_cmd->add_flag("--deterministic", p.deterministic, "Derive the nonce from the key and message");

  auto* verify_cmd = app.add_subcommand("verify", "Verify a signature");
  domain(verify_cmd);
  verify_cmd->add_option("--public", p.public_key, "Signer public key")->required();
  verify_cmd->add_option("--in", p.in, "Message")->required();
  verify_cmd->add_option("--sig", p.sig, "Signature")->required();

  auto* info_cmd = app.add_subcommand("curve-info", "Describe a domain");
  domain(info_cmd);

  auto* demo_cmd = app.add_subcommand("exchange-demo", "Sign-then-encrypt exchange between two parties");
  domain(demo_cmd);
  demo_cmd->add_option("--in", p.in, "Document")->required();
  demo_cmd->add_option("--workdir", p.workdir, "Directory for keys and intermediate files")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*make) return cmd_make_test_domain(t, out);
    if (app.get_subcommands().empty()) {
      err << "hecc: a subcommand is required\n" << app.help();
      return kUsage;
    }
    const CLI::App* sub = app.get_subcommands().front();
    if (sub == keygen_cmd) return cmd_keygen(p, out);
    if (sub == dh_cmd) return cmd_dh(p, out);
    if (sub == enc_cmd) return cmd_encrypt(p, out);
    if (sub == dec_cmd) return cmd_decrypt(p, out);
    if (sub == sign_cmd) return cmd_sign(p, out);
    if (sub == verify_cmd) return cmd_verify(p, out);
    if (sub == info_cmd) return cmd_curve_info(p, out);
    return cmd_exchange_demo(p, out);
  } catch (const DecryptionError& e) {
    err << "hecc: decryption failed: " << e.what() << "\n";
    return kRejected;
  } catch (const InvalidCiphertextError& e) {
    err << "hecc: decryption failed: " << e.what() << "\n";
    return kRejected;
  } catch (const Error& e) {
    err << "hecc: error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "hecc: error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace hecc::cli
