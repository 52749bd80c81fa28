#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ppx {

// Representable depth range, meters. The upper bound is the maximum depth
// the pipeline predicts; the lower bound keeps gamma and inverse depth
// finite.
inline constexpr double kDepthMin = 0.1;
inline constexpr double kDepthMax = 250.0;

// Dense intensity grid, row-major, channel-interleaved, values in [0, 1].
struct ImageBuffer {
  int width = 0;
  int height = 0;
  int channels = 1;
  std::vector<float> data;

  ImageBuffer() = default;
  ImageBuffer(int w, int h, int c, float fill = 0.0f)
      : width(w), height(h), channels(c), data(static_cast<size_t>(w) * h * c, fill) {
    if (w < 1 || h < 1) throw std::invalid_argument("ImageBuffer: size must be at least 1x1");
    if (c != 1 && c != 3) throw std::invalid_argument("ImageBuffer: channels must be 1 or 3");
  }

  size_t index(int x, int y, int c = 0) const {
    return (static_cast<size_t>(y) * width + x) * channels + c;
  }
  float& at(int x, int y, int c = 0) { return data[index(x, y, c)]; }
  float at(int x, int y, int c = 0) const { return data[index(x, y, c)]; }

  bool same_shape(const ImageBuffer& o) const {
    return width == o.width && height == o.height && channels == o.channels;
  }

  // Enforces the [0, 1] intensity invariant.
  void validate() const {
    for (float v : data)
      if (!(v >= 0.0f && v <= 1.0f))
        throw std::invalid_argument("ImageBuffer: intensity outside [0, 1]");
  }
};

// Per-pixel boolean validity grid.
struct Mask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;

  Mask() = default;
  Mask(int w, int h, std::uint8_t fill = 0)
      : width(w), height(h), data(static_cast<size_t>(w) * h, fill) {}

  static Mask all_valid(int w, int h) { return Mask(w, h, 1); }

  size_t index(int x, int y) const { return static_cast<size_t>(y) * width + x; }
  std::uint8_t& at(int x, int y) { return data[index(x, y)]; }
  bool at(int x, int y) const { return data[index(x, y)] != 0; }

  size_t count() const {
    size_t n = 0;
    for (auto v : data) n += (v != 0);
    return n;
  }
};

// Image plus the validity mask produced by warping/synthesis.
struct MaskedImage {
  ImageBuffer image;
  Mask valid;

  MaskedImage() = default;
  MaskedImage(ImageBuffer img, Mask mask) : image(std::move(img)), valid(std::move(mask)) {}
  static MaskedImage fully_valid(ImageBuffer img) {
    Mask m = Mask::all_valid(img.width, img.height);
    return {std::move(img), std::move(m)};
  }
};

// Metric depth per pixel (meters). Valid entries lie in [kDepthMin, kDepthMax].
struct DepthMap {
  int width = 0;
  int height = 0;
  std::vector<double> values;
  std::vector<std::uint8_t> valid;

  DepthMap() = default;
  DepthMap(int w, int h)
      : width(w), height(h),
        values(static_cast<size_t>(w) * h, 0.0),
        valid(static_cast<size_t>(w) * h, 0) {}

  size_t index(int x, int y) const { return static_cast<size_t>(y) * width + x; }
  double& at(int x, int y) { return values[index(x, y)]; }
  double at(int x, int y) const { return values[index(x, y)]; }
  bool valid_at(int x, int y) const { return valid[index(x, y)] != 0; }
  void set(int x, int y, double z) {
    values[index(x, y)] = z;
    valid[index(x, y)] = 1;
  }

  size_t count_valid() const {
    size_t n = 0;
    for (auto v : valid) n += (v != 0);
    return n;
  }

  void validate() const {
    for (size_t i = 0; i < values.size(); ++i)
      if (valid[i] && !(values[i] >= kDepthMin && values[i] <= kDepthMax))
        throw std::invalid_argument("DepthMap: valid depth outside [0.1, 250] m");
  }
};

// Structure variable gamma = h / Z per pixel (dimensionless); exactly zero on
// pixels whose 3D point lies on the reference plane.
struct GammaMap {
  int width = 0;
  int height = 0;
  std::vector<double> values;
  std::vector<std::uint8_t> valid;

  GammaMap() = default;
  GammaMap(int w, int h)
      : width(w), height(h),
        values(static_cast<size_t>(w) * h, 0.0),
        valid(static_cast<size_t>(w) * h, 0) {}

  size_t index(int x, int y) const { return static_cast<size_t>(y) * width + x; }
  double& at(int x, int y) { return values[index(x, y)]; }
  double at(int x, int y) const { return values[index(x, y)]; }
  bool valid_at(int x, int y) const { return valid[index(x, y)] != 0; }
  void set(int x, int y, double g) {
    values[index(x, y)] = g;
    valid[index(x, y)] = 1;
  }
};

// Dense field of warp coordinates p_w, one per target pixel.
struct WarpField {
  int width = 0;
  int height = 0;
  std::vector<double> u;
  std::vector<double> v;
  std::vector<std::uint8_t> valid;

  WarpField() = default;
  WarpField(int w, int h)
      : width(w), height(h),
        u(static_cast<size_t>(w) * h, 0.0),
        v(static_cast<size_t>(w) * h, 0.0),
        valid(static_cast<size_t>(w) * h, 0) {}

  size_t index(int x, int y) const { return static_cast<size_t>(y) * width + x; }
  bool valid_at(int x, int y) const { return valid[index(x, y)] != 0; }
};

// Per-pixel scalar map with validity, used for loss and similarity maps.
struct LossMap {
  int width = 0;
  int height = 0;
  std::vector<double> values;
  std::vector<std::uint8_t> valid;

  LossMap() = default;
  LossMap(int w, int h)
      : width(w), height(h),
        values(static_cast<size_t>(w) * h, 0.0),
        valid(static_cast<size_t>(w) * h, 0) {}

  size_t index(int x, int y) const { return static_cast<size_t>(y) * width + x; }
  double& at(int x, int y) { return values[index(x, y)]; }
  double at(int x, int y) const { return values[index(x, y)]; }
  bool valid_at(int x, int y) const { return valid[index(x, y)] != 0; }
  void set(int x, int y, double val) {
    values[index(x, y)] = val;
    valid[index(x, y)] = 1;
  }
};

}  // namespace ppx
