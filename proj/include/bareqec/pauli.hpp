#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bareqec {

// Single-qubit Pauli labels, two bits each: bit0 = X component, bit1 = Z.
enum : uint8_t { PAULI_I = 0, PAULI_X = 1, PAULI_Y = 3, PAULI_Z = 2 };

uint8_t pauli_from_char(char c);
char pauli_to_char(uint8_t p);

// Phased Pauli operator on up to 64 qubits in binary-symplectic form.
// The operator equals i^phase * (tensor product of literal I/X/Y/Z sites),
// where site q is Y iff x and z bits are both set. Commutation and
// multiplication are word-parallel over the bit masks.
struct PauliString {
  int n = 0;
  uint64_t x = 0;
  uint64_t z = 0;
  int phase = 0;  // exponent of i, mod 4

  PauliString() = default;
  explicit PauliString(int n_) : n(n_) { check_size(n_); }
  PauliString(int n_, uint64_t x_, uint64_t z_, int phase_ = 0)
      : n(n_), x(x_), z(z_), phase(phase_ & 3) {
    check_size(n_);
  }

  static PauliString identity(int n) { return PauliString(n); }
  static PauliString single(int n, int qubit, uint8_t pauli);

  uint8_t pauli_at(int q) const {
    return uint8_t(((x >> q) & 1) | (((z >> q) & 1) << 1));
  }
  void set_pauli(int q, uint8_t p) {
    x = (x & ~(1ULL << q)) | (uint64_t(p & 1) << q);
    z = (z & ~(1ULL << q)) | (uint64_t((p >> 1) & 1) << q);
  }

  bool is_identity() const { return x == 0 && z == 0; }
  int weight() const { return __builtin_popcountll(x | z); }

  bool same_bits(const PauliString& o) const { return x == o.x && z == o.z; }
  bool operator==(const PauliString& o) const {
    return n == o.n && x == o.x && z == o.z && phase == o.phase;
  }

  // Keeps only the first n_keep qubits (used to read the data-register part
  // of a frame spanning data + ancilla qubits). Phase is carried over.
  PauliString truncated(int n_keep) const {
    uint64_t m = n_keep >= 64 ? ~0ULL : ((1ULL << n_keep) - 1);
    return PauliString(n_keep, x & m, z & m, phase);
  }

  std::string str() const;

 private:
  static void check_size(int n_) {
    if (n_ < 0 || n_ > 64) throw std::invalid_argument("PauliString: n out of range");
  }
};

// a.b with exact phase, e.g. X.Z = -iY.
PauliString mul(const PauliString& a, const PauliString& b);

// True iff the symplectic inner product vanishes.
inline bool commutes(const PauliString& a, const PauliString& b) {
  if (a.n != b.n) throw std::invalid_argument("commutes: size mismatch");
  return ((__builtin_popcountll(a.x & b.z) ^ __builtin_popcountll(a.z & b.x)) & 1) == 0;
}

inline int weight(const PauliString& p) { return p.weight(); }

enum class GateKind { H, S, Sdg, CNOT, CZ, CY };

struct CliffordGate {
  GateKind kind;
  int q0;       // single-qubit target, or control for two-qubit kinds
  int q1 = -1;  // target for two-qubit kinds

  bool two_qubit() const {
    return kind == GateKind::CNOT || kind == GateKind::CZ || kind == GateKind::CY;
  }
};

// g . p . g^dagger, phase-exact.
PauliString conjugate(const PauliString& p, const CliffordGate& g);

// Text form in the paper's notation: "Z0 Z1 Z4", optionally prefixed by a
// phase token (+, -, i, -i); the identity renders as "I".
std::string render_pauli(const PauliString& p);
PauliString parse_pauli(const std::string& text, int n);

}  // namespace bareqec
