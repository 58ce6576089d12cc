#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qhol {

inline constexpr std::size_t kMaxDegree = 64;

using Point = std::uint8_t;

// Bijection of {0,...,d-1}.  Products apply the right factor first:
// (p * q)(x) == p(q(x)).
class Perm {
 public:
  Perm() = default;

  static Perm identity(std::size_t degree);
  static Perm from_images(std::span<const std::size_t> images);
  static Perm from_images(std::span<const Point> images);
  // 1-based cycle notation, e.g. "(1,3)(2,5,4)"; "()" is the identity.
  static Perm parse_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const noexcept { return deg_; }
  Point operator()(Point x) const noexcept { return img_[x]; }
  Point operator[](std::size_t x) const noexcept { return img_[x]; }
  std::span<const Point> images() const noexcept { return {img_.data(), deg_}; }

  Perm operator*(const Perm& q) const;
  Perm inverse() const;
  Perm pow(long long k) const;
  std::size_t order() const;
  bool is_identity() const noexcept;
  // Conjugate of q by this: this * q * this^-1.
  Perm conj(const Perm& q) const;

  std::uint64_t hash() const noexcept;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::array<Point, kMaxDegree> img_{};
  std::uint8_t deg_ = 0;
};

Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);

// 1-based cycle notation; fixed points omitted.
std::string to_cycles(const Perm& p);
std::vector<std::size_t> to_image_vector(const Perm& p);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept { return p.hash(); }
};

}  // namespace qhol
