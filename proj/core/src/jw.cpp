#include "starkvqe/jw.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

#include "starkvqe/errors.hpp"

namespace starkvqe {

namespace {

constexpr cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

int letter_code(std::uint64_t x, std::uint64_t z, std::size_t q) {
  const int xb = static_cast<int>((x >> q) & 1u), zb = static_cast<int>((z >> q) & 1u);
  // I < X < Y < Z
  return xb ? (zb ? 2 : 1) : (zb ? 3 : 0);
}

// Base-4 key with qubit 0 most significant; lexicographic on the letter string.
std::uint64_t sort_key(const PauliString& p) {
  std::uint64_t k = 0;
  for (std::size_t q = 0; q < p.n_qubits; ++q) k = (k << 2) | static_cast<std::uint64_t>(letter_code(p.x_mask, p.z_mask, q));
  return k;
}

void check_width(std::size_t n) {
  if (n > 32) throw DomainError("PauliString: at most 32 qubits supported");
}

}  // namespace

PauliString PauliString::from_letters(const std::string& letters, cplx coefficient) {
  PauliString p;
  p.n_qubits = letters.size();
  check_width(p.n_qubits);
  p.coefficient = coefficient;
  for (std::size_t q = 0; q < letters.size(); ++q) {
    switch (letters[q]) {
      case 'I': break;
      case 'X': p.set(q, Pauli::X); break;
      case 'Y': p.set(q, Pauli::Y); break;
      case 'Z': p.set(q, Pauli::Z); break;
      default: throw DomainError(std::string("PauliString: bad letter '") + letters[q] + "'");
    }
  }
  return p;
}

Pauli PauliString::letter(std::size_t q) const {
  switch (letter_code(x_mask, z_mask, q)) {
    case 1: return Pauli::X;
    case 2: return Pauli::Y;
    case 3: return Pauli::Z;
    default: return Pauli::I;
  }
}

void PauliString::set(std::size_t q, Pauli p) {
  const std::uint64_t bit = std::uint64_t{1} << q;
  x_mask &= ~bit;
  z_mask &= ~bit;
  if (p == Pauli::X || p == Pauli::Y) x_mask |= bit;
  if (p == Pauli::Z || p == Pauli::Y) z_mask |= bit;
}

std::string PauliString::letters() const {
  static constexpr char kChars[4] = {'I', 'X', 'Y', 'Z'};
  std::string s(n_qubits, 'I');
  for (std::size_t q = 0; q < n_qubits; ++q) s[q] = kChars[letter_code(x_mask, z_mask, q)];
  return s;
}

PauliString pauli_mul(const PauliString& p, const PauliString& q) {
  if (p.n_qubits != q.n_qubits) throw DomainError("pauli_mul: qubit count mismatch");
  // Each string is i^{|x&z|} X^x Z^z; moving Z^{z1} past X^{x2} costs (-1)^{|z1&x2|}.
  PauliString r;
  r.n_qubits = p.n_qubits;
  r.x_mask = p.x_mask ^ q.x_mask;
  r.z_mask = p.z_mask ^ q.z_mask;
  const int e = std::popcount(p.x_mask & p.z_mask) + std::popcount(q.x_mask & q.z_mask) -
                std::popcount(r.x_mask & r.z_mask) + 2 * std::popcount(p.z_mask & q.x_mask);
  r.coefficient = p.coefficient * q.coefficient * kIPow[((e % 4) + 4) % 4];
  return r;
}

Eigen::MatrixXcd to_dense(const PauliString& p) {
  if (p.n_qubits > 14) throw DomainError("to_dense: too many qubits");
  const std::uint64_t dim = std::uint64_t{1} << p.n_qubits;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  const cplx base = p.coefficient * kIPow[std::popcount(p.x_mask & p.z_mask) % 4];
  for (std::uint64_t s = 0; s < dim; ++s) {
    const double sign = (std::popcount(p.z_mask & s) & 1) ? -1.0 : 1.0;
    m(static_cast<Eigen::Index>(s ^ p.x_mask), static_cast<Eigen::Index>(s)) += base * sign;
  }
  return m;
}

PauliSum::PauliSum(std::size_t n_qubits, std::vector<PauliString> terms) : n_(n_qubits), terms_(std::move(terms)) {
  check_width(n_);
  for (const auto& t : terms_)
    if (t.n_qubits != n_) throw DomainError("PauliSum: qubit count mismatch");
}

PauliSum PauliSum::identity(std::size_t n_qubits, cplx c) {
  PauliString p;
  p.n_qubits = n_qubits;
  p.coefficient = c;
  return PauliSum(n_qubits, {p});
}

void PauliSum::add(const PauliString& p) {
  if (p.n_qubits != n_) throw DomainError("PauliSum::add: qubit count mismatch");
  terms_.push_back(p);
}

PauliSum& PauliSum::operator+=(const PauliSum& o) {
  if (o.n_ != n_) throw DomainError("PauliSum: qubit count mismatch");
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& o) {
  if (o.n_ != n_) throw DomainError("PauliSum: qubit count mismatch");
  for (auto t : o.terms_) {
    t.coefficient = -t.coefficient;
    terms_.push_back(t);
  }
  return *this;
}

PauliSum& PauliSum::operator*=(cplx c) {
  for (auto& t : terms_) t.coefficient *= c;
  return *this;
}

PauliSum PauliSum::simplified(double threshold) const {
  std::vector<std::pair<std::uint64_t, PauliString>> keyed;
  keyed.reserve(terms_.size());
  for (const auto& t : terms_) keyed.emplace_back(sort_key(t), t);
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  PauliSum out(n_);
  for (std::size_t i = 0; i < keyed.size();) {
    PauliString acc = keyed[i].second;
    cplx c = 0.0;
    std::size_t j = i;
    for (; j < keyed.size() && keyed[j].first == keyed[i].first; ++j) c += keyed[j].second.coefficient;
    acc.coefficient = c;
    if (std::abs(c) > threshold) out.terms_.push_back(acc);
    i = j;
  }
  return out;
}

PauliSum PauliSum::adjoint() const {
  PauliSum out = *this;
  for (auto& t : out.terms_) t.coefficient = std::conj(t.coefficient);
  return out;
}

bool PauliSum::is_hermitian(double tol) const {
  for (const auto& t : simplified(0.0).terms_)
    if (std::fabs(t.coefficient.imag()) > tol) return false;
  return true;
}

cplx PauliSum::identity_coefficient() const {
  cplx c = 0.0;
  for (const auto& t : terms_)
    if (t.is_identity()) c += t.coefficient;
  return c;
}

Eigen::MatrixXcd PauliSum::to_dense() const {
  if (n_ > 14) throw DomainError("PauliSum::to_dense: too many qubits");
  const std::uint64_t dim = std::uint64_t{1} << n_;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (const auto& p : terms_) {
    const cplx base = p.coefficient * kIPow[std::popcount(p.x_mask & p.z_mask) % 4];
    for (std::uint64_t s = 0; s < dim; ++s) {
      const double sign = (std::popcount(p.z_mask & s) & 1) ? -1.0 : 1.0;
      m(static_cast<Eigen::Index>(s ^ p.x_mask), static_cast<Eigen::Index>(s)) += base * sign;
    }
  }
  return m;
}

std::string PauliSum::to_text() const {
  std::ostringstream os;
  os << std::setprecision(17);
  for (const auto& t : terms_) os << t.coefficient.real() << ' ' << t.coefficient.imag() << ' ' << t.letters() << '\n';
  return os.str();
}

PauliSum PauliSum::from_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::vector<PauliString> terms;
  std::size_t n = 0;
  bool first = true;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    double re = 0, im = 0;
    std::string letters;
    if (!(ls >> re >> im >> letters)) throw DomainError("PauliSum::from_text: malformed line '" + line + "'");
    PauliString p = PauliString::from_letters(letters, {re, im});
    if (first) {
      n = p.n_qubits;
      first = false;
    } else if (p.n_qubits != n) {
      throw DomainError("PauliSum::from_text: inconsistent qubit counts");
    }
    terms.push_back(p);
  }
  return PauliSum(n, std::move(terms));
}

PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
PauliSum operator*(cplx c, PauliSum a) { return a *= c; }

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  if (a.n_qubits() != b.n_qubits()) throw DomainError("PauliSum product: qubit count mismatch");
  std::vector<PauliString> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a.terms())
    for (const auto& y : b.terms()) out.push_back(pauli_mul(x, y));
  return PauliSum(a.n_qubits(), std::move(out));
}

PauliSum commutator(const PauliSum& a, const PauliSum& b) { return (a * b - b * a).simplified(); }
PauliSum anticommutator(const PauliSum& a, const PauliSum& b) { return (a * b + b * a).simplified(); }

PauliSum jw_lowering(std::size_t mode, std::size_t n_qubits, JWConvention convention) {
  check_width(n_qubits);
  if (mode >= n_qubits) throw DomainError("jw_lowering: mode index out of range");
  const std::uint64_t below = (std::uint64_t{1} << mode) - 1;
  const std::uint64_t bit = std::uint64_t{1} << mode;
  // String sign: Z..Z, or (-Z)..(-Z) in the alternate convention.
  const double string_sign = (convention == JWConvention::Alternate && (mode % 2 == 1)) ? -1.0 : 1.0;
  const cplx y_coef = convention == JWConvention::QuantumInformation ? cplx(0.0, 0.5) : cplx(0.0, -0.5);
  PauliString x{n_qubits, bit, below, 0.5 * string_sign};
  PauliString y{n_qubits, bit, below | bit, y_coef * string_sign};
  return PauliSum(n_qubits, {x, y});
}

PauliSum jw_raising(std::size_t mode, std::size_t n_qubits, JWConvention convention) {
  return jw_lowering(mode, n_qubits, convention).adjoint();
}

PauliSum number_operator(std::size_t n_qubits) {
  PauliSum n(n_qubits);
  for (std::size_t q = 0; q < n_qubits; ++q) {
    n.add({n_qubits, 0, 0, 0.5});
    n.add({n_qubits, 0, std::uint64_t{1} << q, -0.5});
  }
  return n.simplified();
}

PauliSum map_hamiltonian(const SpinOrbitalTensors& t, double constant, JWConvention convention, double threshold) {
  const std::size_t n = t.n_spin_orbitals;
  std::vector<PauliSum> lo(n), hi(n);
  for (std::size_t q = 0; q < n; ++q) {
    lo[q] = jw_lowering(q, n, convention);
    hi[q] = jw_raising(q, n, convention);
  }
  std::map<std::pair<std::uint64_t, std::uint64_t>, cplx> acc;
  auto accumulate = [&](const PauliSum& s, cplx w) {
    for (const auto& p : s.terms()) acc[{p.x_mask, p.z_mask}] += w * p.coefficient;
  };
  if (constant != 0.0) acc[{0, 0}] += constant;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const double tau = t.one_body(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
      if (tau != 0.0) accumulate(hi[a] * lo[b], tau);
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) {
      const PauliSum ac = hi[a] * hi[c];
      for (std::size_t d = 0; d < n; ++d) {
        const PauliSum acd = ac * lo[d];
        for (std::size_t b = 0; b < n; ++b) {
          const double mu = t.two_body(a, b, c, d);
          if (mu == 0.0) continue;
          accumulate(acd * lo[b], 0.5 * mu);
        }
      }
    }
  PauliSum h(n);
  for (const auto& [key, c] : acc) {
    if (std::abs(c) <= threshold) continue;
    if (std::fabs(c.imag()) > 1e-10) throw DomainError("map_hamiltonian: non-Hermitian result");
    h.add({n, key.first, key.second, cplx(c.real(), 0.0)});
  }
  return h.simplified(threshold);
}

}  // namespace starkvqe
