#include "semiconj/transform.hpp"

#include <algorithm>
#include <sstream>

namespace semiconj {

  namespace {
    void check_degree(std::size_t n) {
      if (n == 0) {
        throw Error("the ground set must be nonempty (n >= 1)");
      }
      if (n >= diamond) {
        throw Error("degree " + std::to_string(n) + " is too large");
      }
    }

    void check_same_degree(PartialTransformation const& a,
                           PartialTransformation const& b,
                           char const*                  what) {
      if (a.degree() != b.degree()) {
        throw Error(std::string(what) + ": degree mismatch ("
                    + std::to_string(a.degree()) + " vs "
                    + std::to_string(b.degree()) + ")");
      }
    }

    // diamond sorts first
    constexpr std::uint64_t order_key(point x) noexcept {
      return x == diamond ? 0 : std::uint64_t(x) + 1;
    }
  }  // namespace

  PartialTransformation::PartialTransformation(std::size_t n)
      : _image((check_degree(n), n), diamond) {}

  PartialTransformation::PartialTransformation(std::size_t        n,
                                               std::vector<point> image)
      : _image(std::move(image)) {
    check_degree(n);
    if (_image.size() != n) {
      throw Error("image has length " + std::to_string(_image.size())
                  + " but n = " + std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (_image[i] != diamond && _image[i] >= n) {
        throw Error("image[" + std::to_string(i)
                    + "] = " + std::to_string(_image[i])
                    + " is outside [0, " + std::to_string(n) + ")");
      }
    }
  }

  PartialTransformation::PartialTransformation(
      std::initializer_list<point> image)
      : PartialTransformation(image.size(), std::vector<point>(image)) {}

  PartialTransformation PartialTransformation::identity(std::size_t n) {
    check_degree(n);
    std::vector<point> img(n);
    for (std::size_t i = 0; i < n; ++i) {
      img[i] = static_cast<point>(i);
    }
    return PartialTransformation(n, std::move(img));
  }

  PartialTransformation
  PartialTransformation::partial_identity(std::size_t            n,
                                          std::span<point const> pts) {
    PartialTransformation result(n);
    for (point x : pts) {
      if (x >= n) {
        throw Error("point " + std::to_string(x) + " is outside [0, "
                    + std::to_string(n) + ")");
      }
      result._image[x] = x;
    }
    return result;
  }

  std::vector<point> PartialTransformation::domain() const {
    std::vector<point> out;
    for (std::size_t i = 0; i < _image.size(); ++i) {
      if (_image[i] != diamond) {
        out.push_back(static_cast<point>(i));
      }
    }
    return out;
  }

  std::vector<point> PartialTransformation::image() const {
    std::vector<bool> seen(_image.size(), false);
    for (point y : _image) {
      if (y != diamond) {
        seen[y] = true;
      }
    }
    std::vector<point> out;
    for (std::size_t i = 0; i < seen.size(); ++i) {
      if (seen[i]) {
        out.push_back(static_cast<point>(i));
      }
    }
    return out;
  }

  std::vector<bool> PartialTransformation::span_mask() const {
    std::vector<bool> mask(_image.size(), false);
    for (std::size_t i = 0; i < _image.size(); ++i) {
      if (_image[i] != diamond) {
        mask[i]         = true;
        mask[_image[i]] = true;
      }
    }
    return mask;
  }

  std::vector<point> PartialTransformation::span() const {
    auto               mask = span_mask();
    std::vector<point> out;
    for (std::size_t i = 0; i < mask.size(); ++i) {
      if (mask[i]) {
        out.push_back(static_cast<point>(i));
      }
    }
    return out;
  }

  PartialTransformation
  PartialTransformation::restrict_to(std::span<point const> pts) const {
    PartialTransformation result(degree());
    for (point x : pts) {
      if (x >= degree()) {
        throw Error("point " + std::to_string(x) + " is outside [0, "
                    + std::to_string(degree()) + ")");
      }
      result._image[x] = _image[x];
    }
    return result;
  }

  bool PartialTransformation::is_full() const noexcept {
    return std::none_of(_image.begin(), _image.end(), [](point y) {
      return y == diamond;
    });
  }

  bool PartialTransformation::is_injective() const {
    std::vector<bool> seen(_image.size(), false);
    for (point y : _image) {
      if (y == diamond) {
        continue;
      }
      if (seen[y]) {
        return false;
      }
      seen[y] = true;
    }
    return true;
  }

  bool PartialTransformation::is_zero() const noexcept {
    return std::all_of(_image.begin(), _image.end(), [](point y) {
      return y == diamond;
    });
  }

  std::string PartialTransformation::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < _image.size(); ++i) {
      if (i != 0) {
        os << ' ';
      }
      if (_image[i] == diamond) {
        os << '-';
      } else {
        os << _image[i];
      }
    }
    os << ']';
    return os.str();
  }

  std::strong_ordering operator<=>(PartialTransformation const& a,
                                   PartialTransformation const& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) {
      return c;
    }
    for (std::size_t i = 0; i < a.degree(); ++i) {
      auto c = order_key(a._image[i]) <=> order_key(b._image[i]);
      if (c != 0) {
        return c;
      }
    }
    return std::strong_ordering::equal;
  }

  PartialTransformation compose(PartialTransformation const& a,
                                PartialTransformation const& b) {
    check_same_degree(a, b, "compose");
    std::vector<point> img(a.degree());
    for (std::size_t i = 0; i < img.size(); ++i) {
      img[i] = b[a[static_cast<point>(i)]];
    }
    return PartialTransformation(a.degree(), std::move(img));
  }

  PartialTransformation power(PartialTransformation const& a, std::size_t k) {
    auto result = PartialTransformation::identity(a.degree());
    for (std::size_t i = 0; i < k; ++i) {
      result = compose(result, a);
    }
    return result;
  }

  bool contains(PartialTransformation const& beta,
                PartialTransformation const& alpha) {
    check_same_degree(beta, alpha, "contains");
    for (point x = 0; x < beta.degree(); ++x) {
      if (beta.defined_at(x) && beta[x] != alpha[x]) {
        return false;
      }
    }
    return true;
  }

  PartialTransformation join(std::size_t                            n,
                             std::span<PartialTransformation const> parts) {
    std::vector<point> img(n, diamond);
    for (auto const& g : parts) {
      if (g.degree() != n) {
        throw Error("join: degree mismatch (" + std::to_string(g.degree())
                    + " vs " + std::to_string(n) + ")");
      }
      for (point x = 0; x < n; ++x) {
        if (!g.defined_at(x)) {
          continue;
        }
        if (img[x] != diamond) {
          throw Error("join: domains overlap at point " + std::to_string(x));
        }
        img[x] = g[x];
      }
    }
    return PartialTransformation(n, std::move(img));
  }

  PartialTransformation make_basic(BasicKind              kind,
                                   std::span<point const> points,
                                   std::size_t            n) {
    check_degree(n);
    std::vector<point> img(n, diamond);
    std::vector<bool>  seen(n, false);
    for (point x : points) {
      if (x >= n) {
        throw Error("make_basic: point " + std::to_string(x)
                    + " is outside [0, " + std::to_string(n) + ")");
      }
      if (seen[x]) {
        throw Error("make_basic: duplicate point " + std::to_string(x));
      }
      seen[x] = true;
    }
    std::size_t const k = points.size();
    if (kind == BasicKind::cycle) {
      if (k < 1) {
        throw Error("make_basic: a cycle needs at least 1 point");
      }
      for (std::size_t i = 0; i < k; ++i) {
        img[points[i]] = points[(i + 1) % k];
      }
    } else {
      if (k < 2) {
        throw Error("make_basic: a chain needs at least 2 points");
      }
      for (std::size_t i = 0; i + 1 < k; ++i) {
        img[points[i]] = points[i + 1];
      }
    }
    return PartialTransformation(n, std::move(img));
  }

  PartialTransformation make_cycle(std::initializer_list<point> points,
                                   std::size_t                  n) {
    return make_basic(BasicKind::cycle, std::span(points.begin(), points.size()),
                      n);
  }

  PartialTransformation make_chain(std::initializer_list<point> points,
                                   std::size_t                  n) {
    return make_basic(BasicKind::chain, std::span(points.begin(), points.size()),
                      n);
  }

  void to_json(nlohmann::json& j, PartialTransformation const& a) {
    auto img = nlohmann::json::array();
    for (point y : a.image_vector()) {
      if (y == diamond) {
        img.push_back(nullptr);
      } else {
        img.push_back(y);
      }
    }
    j = nlohmann::json{{"n", a.degree()}, {"image", std::move(img)}};
  }

  void from_json(nlohmann::json const& j, PartialTransformation& a) {
    if (!j.is_object()) {
      throw Error("transformation: expected a JSON object");
    }
    if (!j.contains("n") || !j["n"].is_number_unsigned()
        || j["n"].get<std::uint64_t>() == 0) {
      throw Error("transformation: field \"n\" must be a positive integer");
    }
    if (!j.contains("image") || !j["image"].is_array()) {
      throw Error("transformation: field \"image\" must be an array");
    }
    auto const         n = j["n"].get<std::size_t>();
    auto const&        arr = j["image"];
    std::vector<point> img;
    img.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
      auto const& v = arr[i];
      if (v.is_null()) {
        img.push_back(diamond);
      } else if (v.is_number_unsigned() && v.get<std::uint64_t>() < diamond) {
        img.push_back(v.get<point>());
      } else {
        throw Error("transformation: field \"image\"[" + std::to_string(i)
                    + "] must be a nonnegative integer or null");
      }
    }
    try {
      a = PartialTransformation(n, std::move(img));
    } catch (Error const& e) {
      throw Error(std::string("transformation: field \"image\": ") + e.what());
    }
  }

}  // namespace semiconj
