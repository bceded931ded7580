#pragma once

#include <cstdint>
#include <vector>

#include "crayon/tensor.hpp"

namespace crayon::color {

// 8-bit sRGB image, row-major interleaved R,G,B.
struct Rgb8Image {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> data;  // width * height * 3

  Rgb8Image() = default;
  Rgb8Image(int w, int h) : width(w), height(h), data(static_cast<size_t>(w) * h * 3, 0) {}

  uint8_t& at(int x, int y, int c) { return data[(static_cast<size_t>(y) * width + x) * 3 + c]; }
  uint8_t at(int x, int y, int c) const { return data[(static_cast<size_t>(y) * width + x) * 3 + c]; }
  size_t raw_bytes() const { return data.size(); }
};

// Planar CIELAB image. L in [0,100], A and B in [-128,127] (clamped on
// conversion).
struct LabImage {
  int width = 0;
  int height = 0;
  std::vector<float> l_plane;
  std::vector<float> a_plane;
  std::vector<float> b_plane;

  LabImage() = default;
  LabImage(int w, int h)
      : width(w),
        height(h),
        l_plane(static_cast<size_t>(w) * h, 0.0f),
        a_plane(static_cast<size_t>(w) * h, 0.0f),
        b_plane(static_cast<size_t>(w) * h, 0.0f) {}

  size_t pixel_count() const { return static_cast<size_t>(width) * height; }
};

// Per-pixel conversions under the sRGB/D65 convention: piecewise sRGB gamma
// (threshold 0.04045, exponent 2.4) and the CIELAB f-function with
// delta = 6/29.
LabImage rgb_to_lab(const Rgb8Image& img);
Rgb8Image lab_to_rgb(const LabImage& img);

// Single-pixel variants used by the codecs.
void rgb_pixel_to_lab(uint8_t r, uint8_t g, uint8_t b, float* l_out, float* a_out, float* b_out);
void lab_pixel_to_rgb(float l, float a, float b, uint8_t* r_out, uint8_t* g_out, uint8_t* b_out);

// Network scaling: channel 0 = L/100 in [0,1], channels 1,2 = A/128, B/128 in
// [-1,1). Absent chroma therefore encodes as exactly 0.
Tensor normalize_lab(const LabImage& img);       // -> (3,H,W)
LabImage denormalize_lab(const Tensor& t);       // (3,H,W) ->

// Assemble a LAB image from an L tensor (1,H,W) and AB tensor (2,H,W), both
// in normalized space. Values are denormalized and clamped to LAB ranges.
LabImage assemble_lab(const Tensor& l_norm, const Tensor& ab_norm);

constexpr float kLScale = 100.0f;
constexpr float kAbScale = 128.0f;

}  // namespace crayon::color
