#include "ashom/abelian.hpp"

#include <cctype>
#include <stdexcept>

#include "ashom/smith.hpp"

namespace ashom {

FGAbelianGroup::FGAbelianGroup(std::size_t rank, const std::vector<Integer>& orders) : rank_(rank) {
  std::vector<Integer> nontrivial;
  for (const auto& d : orders) {
    Integer a = boost::multiprecision::abs(d);
    if (a == 0)
      ++rank_;
    else if (a != 1)
      nontrivial.push_back(a);
  }
  if (nontrivial.empty()) return;
  for (const auto& d : smith_diagonal(diagonal(nontrivial)))
    if (d != 1) torsion_.push_back(d);
}

Integer FGAbelianGroup::torsion_order() const {
  Integer p = 1;
  for (const auto& d : torsion_) p *= d;
  return p;
}

Integer FGAbelianGroup::exponent() const { return torsion_.empty() ? Integer(1) : torsion_.back(); }

std::optional<Integer> FGAbelianGroup::order() const {
  if (rank_ > 0) return std::nullopt;
  return torsion_order();
}

std::size_t FGAbelianGroup::torsion_length() const {
  std::size_t len = 0;
  for (Integer d : torsion_) {
    for (Integer p = 2; p * p <= d; ++p)
      while (d % p == 0) {
        d /= p;
        ++len;
      }
    if (d > 1) ++len;
  }
  return len;
}

IntegerMatrix FGAbelianGroup::relation_matrix() const {
  std::vector<Integer> d(rank_, Integer(0));
  d.insert(d.end(), torsion_.begin(), torsion_.end());
  return diagonal(d);
}

FGAbelianGroup FGAbelianGroup::operator+(const FGAbelianGroup& other) const {
  std::vector<Integer> orders = torsion_;
  orders.insert(orders.end(), other.torsion_.begin(), other.torsion_.end());
  return FGAbelianGroup(rank_ + other.rank_, orders);
}

std::string FGAbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string out;
  auto append = [&out](const std::string& s) {
    if (!out.empty()) out += " (+) ";
    out += s;
  };
  if (rank_ == 1)
    append("Z");
  else if (rank_ > 1)
    append("Z^" + std::to_string(rank_));
  for (const auto& d : torsion_) append("Z/" + d.str());
  return out;
}

FGAbelianGroup cokernel(const IntegerMatrix& A) {
  std::vector<Integer> d = smith_diagonal(A);
  return FGAbelianGroup(A.rows() - d.size(), d);
}

FGAbelianGroup hom(const FGAbelianGroup& A, const FGAbelianGroup& B) {
  // Hom(Z, B) = B, Hom(Z/d, Z) = 0, Hom(Z/d, Z/e) = Z/gcd(d, e).
  std::size_t rank = A.rank() * B.rank();
  std::vector<Integer> orders;
  for (std::size_t i = 0; i < A.rank(); ++i) orders.insert(orders.end(), B.torsion().begin(), B.torsion().end());
  for (const auto& d : A.torsion())
    for (const auto& e : B.torsion()) orders.push_back(gcd(d, e));
  return FGAbelianGroup(rank, orders);
}

FGAbelianGroup ext(const FGAbelianGroup& A, const FGAbelianGroup& B) {
  // Ext(Z, B) = 0, Ext(Z/d, Z) = Z/d, Ext(Z/d, Z/e) = Z/gcd(d, e).
  std::vector<Integer> orders;
  for (const auto& d : A.torsion()) {
    for (std::size_t i = 0; i < B.rank(); ++i) orders.push_back(d);
    for (const auto& e : B.torsion()) orders.push_back(gcd(d, e));
  }
  return FGAbelianGroup(0, orders);
}

bool is_isomorphic(const FGAbelianGroup& A, const FGAbelianGroup& B) { return A == B; }

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

Integer parse_natural(const std::string& s, std::string_view whole) {
  if (s.empty()) throw std::invalid_argument("bad group descriptor: " + std::string(whole));
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("bad group descriptor: " + std::string(whole));
  return Integer(s);
}

}  // namespace

FGAbelianGroup parse_group(std::string_view text) {
  std::string s = strip(text);
  for (std::size_t pos; (pos = s.find("(+)")) != std::string::npos;) s.replace(pos, 3, "+");
  if (s.empty()) throw std::invalid_argument("empty group descriptor");
  std::size_t rank = 0;
  std::vector<Integer> orders;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find('+', start);
    std::string term = s.substr(start, end == std::string::npos ? std::string::npos : end - start);
    if (term == "0") {
      // trivial summand
    } else if (term == "Z") {
      ++rank;
    } else if (term.rfind("Z^", 0) == 0) {
      rank += parse_natural(term.substr(2), text).convert_to<std::size_t>();
    } else if (term.rfind("Z/", 0) == 0) {
      Integer d = parse_natural(term.substr(2), text);
      if (d == 0) throw std::invalid_argument("Z/0 is not allowed; write Z: " + std::string(text));
      orders.push_back(d);
    } else {
      throw std::invalid_argument("bad group descriptor: " + std::string(text));
    }
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return FGAbelianGroup(rank, orders);
}

}  // namespace ashom
