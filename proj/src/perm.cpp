#include "qhol/perm.hpp"

#include <cstring>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qhol {

namespace {

void check_degree(std::size_t degree) {
  if (degree == 0 || degree > kMaxDegree)
    throw std::invalid_argument("permutation degree " + std::to_string(degree) +
                                " outside 1.." + std::to_string(kMaxDegree));
}

template <typename T>
Perm build_from(std::span<const T> images) {
  check_degree(images.size());
  std::vector<Point> tmp;
  tmp.reserve(images.size());
  for (auto v : images) {
    if (static_cast<std::size_t>(v) >= images.size())
      throw std::invalid_argument("image list is not a bijection");
    tmp.push_back(static_cast<Point>(v));
  }
  return Perm::from_images(std::span<const Point>(tmp));
}

}  // namespace

Perm Perm::identity(std::size_t degree) {
  check_degree(degree);
  Perm p;
  p.deg_ = static_cast<std::uint8_t>(degree);
  for (std::size_t i = 0; i < degree; ++i)
    p.img_[i] = static_cast<Point>(i);
  return p;
}

Perm Perm::from_images(std::span<const std::size_t> images) {
  return build_from(images);
}

Perm Perm::from_images(std::span<const Point> images) {
  check_degree(images.size());
  Perm p;
  p.deg_ = static_cast<std::uint8_t>(images.size());
  std::uint64_t seen = 0;
  for (std::size_t i = 0; i < images.size(); ++i) {
    Point v = images[i];
    if (v >= images.size() || (seen >> v & 1u))
      throw std::invalid_argument("image list is not a bijection");
    seen |= std::uint64_t{1} << v;
    p.img_[i] = v;
  }
  return p;
}

Perm Perm::parse_cycles(std::string_view text, std::size_t degree) {
  Perm p = identity(degree);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle text");
    ++i;
    std::vector<std::size_t> cyc;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      std::size_t v = 0;
      std::size_t start = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9')
        v = v * 10 + static_cast<std::size_t>(text[i++] - '0');
      if (i == start) throw std::invalid_argument("expected point in cycle text");
      if (v < 1 || v > degree)
        throw std::invalid_argument("point " + std::to_string(v) + " out of range");
      cyc.push_back(v - 1);
      skip_ws();
      if (i < text.size() && text[i] == ',') ++i;
    }
    // Cycles in a word act left to right (GAP reading), so a later cycle
    // becomes the left factor.
    Perm c = identity(degree);
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (c.img_[cyc[k]] != cyc[k])
        throw std::invalid_argument("repeated point in a cycle");
      c.img_[cyc[k]] = static_cast<Point>(cyc[(k + 1) % cyc.size()]);
    }
    p = c * p;
    skip_ws();
  }
  return p;
}

Perm Perm::operator*(const Perm& q) const {
  if (deg_ != q.deg_) throw std::invalid_argument("degree mismatch in compose");
  Perm r;
  r.deg_ = deg_;
  for (std::size_t x = 0; x < deg_; ++x) r.img_[x] = img_[q.img_[x]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.deg_ = deg_;
  for (std::size_t x = 0; x < deg_; ++x) r.img_[img_[x]] = static_cast<Point>(x);
  return r;
}

Perm Perm::pow(long long k) const {
  Perm base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k)
                               : static_cast<unsigned long long>(k);
  Perm acc = identity(deg_ == 0 ? 1 : deg_);
  if (deg_ == 0) return *this;
  while (e) {
    if (e & 1u) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::size_t Perm::order() const {
  std::size_t ord = 1;
  std::uint64_t seen = 0;
  for (std::size_t x = 0; x < deg_; ++x) {
    if (seen >> x & 1u) continue;
    std::size_t len = 0;
    std::size_t y = x;
    do {
      seen |= std::uint64_t{1} << y;
      y = img_[y];
      ++len;
    } while (y != x);
    ord = std::lcm(ord, len);
  }
  return ord;
}

bool Perm::is_identity() const noexcept {
  for (std::size_t x = 0; x < deg_; ++x)
    if (img_[x] != x) return false;
  return true;
}

Perm Perm::conj(const Perm& q) const {
  if (deg_ != q.deg_) throw std::invalid_argument("degree mismatch in conj");
  // (a q a^-1)(a(x)) = a(q(x))
  Perm r;
  r.deg_ = deg_;
  for (std::size_t x = 0; x < deg_; ++x) r.img_[img_[x]] = img_[q.img_[x]];
  return r;
}

std::uint64_t Perm::hash() const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ deg_;
  for (std::size_t off = 0; off < deg_; off += 8) {
    std::uint64_t w;
    std::memcpy(&w, img_.data() + off, 8);
    h ^= w;
    h *= 0xff51afd7ed558ccdull;
    h ^= h >> 32;
  }
  return h;
}

Perm compose(const Perm& p, const Perm& q) { return p * q; }
Perm inverse(const Perm& p) { return p.inverse(); }

std::string to_cycles(const Perm& p) {
  std::ostringstream out;
  std::uint64_t seen = 0;
  bool any = false;
  for (std::size_t x = 0; x < p.degree(); ++x) {
    if ((seen >> x & 1u) || p[x] == x) continue;
    any = true;
    out << '(';
    std::size_t y = x;
    bool first = true;
    do {
      seen |= std::uint64_t{1} << y;
      if (!first) out << ',';
      out << y + 1;
      first = false;
      y = p[y];
    } while (y != x);
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

std::vector<std::size_t> to_image_vector(const Perm& p) {
  return {p.images().begin(), p.images().end()};
}

}  // namespace qhol
