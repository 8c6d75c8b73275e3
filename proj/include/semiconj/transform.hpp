#ifndef SEMICONJ_TRANSFORM_HPP
#define SEMICONJ_TRANSFORM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace semiconj {

  // Thrown for every violated precondition on user-supplied data: size
  // mismatches, out-of-range points, malformed files, membership failures.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  using point = std::uint32_t;

  // The diamond value: stands for "undefined" and is never a point of X.
  inline constexpr point diamond = std::numeric_limits<point>::max();

  // A partial self-map of X = {0, ..., n-1}, functions written on the right:
  // x(ab) = (xa)b.  Entry i of the image is i*alpha or diamond.
  class PartialTransformation {
   public:
    PartialTransformation() = default;

    // The zero of P(X): empty domain.
    explicit PartialTransformation(std::size_t n);

    PartialTransformation(std::size_t n, std::vector<point> image);
    PartialTransformation(std::initializer_list<point> image);

    static PartialTransformation identity(std::size_t n);
    // Identity restricted to the given points.
    static PartialTransformation partial_identity(std::size_t             n,
                                                  std::span<point const> pts);

    std::size_t degree() const noexcept {
      return _image.size();
    }

    // x*alpha under the diamond convention; diamond maps to diamond.
    point operator[](point x) const noexcept {
      return x < _image.size() ? _image[x] : diamond;
    }

    bool defined_at(point x) const noexcept {
      return (*this)[x] != diamond;
    }

    std::vector<point> const& image_vector() const noexcept {
      return _image;
    }

    std::vector<point> domain() const;
    std::vector<point> image() const;
    std::vector<point> span() const;
    std::vector<bool>  span_mask() const;

    // Restriction to the given domain points (those outside dom stay undefined).
    PartialTransformation restrict_to(std::span<point const> pts) const;

    bool is_full() const noexcept;
    bool is_injective() const;
    bool is_zero() const noexcept;

    std::string to_string() const;

    friend bool operator==(PartialTransformation const&,
                           PartialTransformation const&)
        = default;

    // Lexicographic on the image with diamond ordered before every point.
    friend std::strong_ordering operator<=>(PartialTransformation const& a,
                                            PartialTransformation const& b);

   private:
    std::vector<point> _image;
  };

  PartialTransformation compose(PartialTransformation const& a,
                                PartialTransformation const& b);

  inline PartialTransformation operator*(PartialTransformation const& a,
                                         PartialTransformation const& b) {
    return compose(a, b);
  }

  PartialTransformation power(PartialTransformation const& a, std::size_t k);

  // True iff beta is contained in alpha: dom(beta) within dom(alpha) and the
  // two agree on dom(beta).
  bool contains(PartialTransformation const& beta,
                PartialTransformation const& alpha);

  // Join of pairwise disjoint transformations.  Throws if two domains share a
  // point.  The degree n is needed for the empty join.
  PartialTransformation join(std::size_t                              n,
                             std::span<PartialTransformation const> parts);

  enum class BasicKind { cycle, chain };

  // cycle [x0..x_{k-1}] maps x_i -> x_{i+1 mod k}; chain [x0..xk] maps
  // x_i -> x_{i+1} for i < k and leaves xk undefined.
  PartialTransformation make_basic(BasicKind              kind,
                                   std::span<point const> points,
                                   std::size_t            n);

  PartialTransformation make_cycle(std::initializer_list<point> points,
                                   std::size_t                  n);
  PartialTransformation make_chain(std::initializer_list<point> points,
                                   std::size_t                  n);

  // {"n": 6, "image": [1, 2, 5, 4, 5, null]}
  void to_json(nlohmann::json& j, PartialTransformation const& a);
  void from_json(nlohmann::json const& j, PartialTransformation& a);

}  // namespace semiconj

#endif
