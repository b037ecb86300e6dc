#pragma once

#include <cassert>
#include <cstdint>
#include <cmath>
#include <vector>

namespace qmd {

// Grayscale raster, row-major float. Intensities are kept in [0,1]
// (the "dynamic range" all thresholds in this library are relative to);
// PNG I/O converts to and from 8-bit.
struct Image {
    int width = 0;
    int height = 0;
    std::vector<float> px;

    Image() = default;
    Image(int w, int h, float fill = 0.0f)
        : width(w), height(h), px(static_cast<size_t>(w) * h, fill) {}

    float& at(int x, int y) { return px[static_cast<size_t>(y) * width + x]; }
    float at(int x, int y) const { return px[static_cast<size_t>(y) * width + x]; }
    size_t size() const { return px.size(); }
    bool same_dims(const Image& o) const { return width == o.width && height == o.height; }
};

// Binary per-pixel mask. 1 = member. Also carries the frame it belongs to
// and whether it came from a degenerate (fallback) seed.
struct RegionMask {
    int width = 0;
    int height = 0;
    int frame_index = 0;
    bool degenerate_seed = false;
    std::vector<uint8_t> bits;

    RegionMask() = default;
    RegionMask(int w, int h, uint8_t fill = 0)
        : width(w), height(h), bits(static_cast<size_t>(w) * h, fill) {}

    uint8_t& at(int x, int y) { return bits[static_cast<size_t>(y) * width + x]; }
    uint8_t at(int x, int y) const { return bits[static_cast<size_t>(y) * width + x]; }
    size_t size() const { return bits.size(); }

    size_t area() const {
        size_t a = 0;
        for (uint8_t b : bits) a += b != 0;
        return a;
    }
    bool empty_mask() const { return area() == 0; }
    bool same_bits(const RegionMask& o) const { return bits == o.bits; }
};

inline bool sample_in_bounds(const Image& img, float x, float y) {
    return x >= 0.0f && y >= 0.0f && x <= static_cast<float>(img.width - 1) &&
           y <= static_cast<float>(img.height - 1);
}

// Bilinear sample with border clamp. Pair with sample_in_bounds when the
// caller needs to mark out-of-grid samples invalid.
float sample_bilinear(const Image& img, float x, float y);

void gaussian_blur_inplace(Image& img, float sigma);
Image gaussian_blur(const Image& img, float sigma);
Image box_blur3(const Image& img);

// Central differences, replicated border.
void gradients(const Image& img, Image& gx, Image& gy);

Image resize_bilinear(const Image& img, int new_w, int new_h);
Image downsample_half(const Image& img);

// Coarse-to-fine stack; levels[0] is full resolution.
std::vector<Image> build_pyramid(const Image& img, int levels, float scale_factor,
                                 int min_dim = 12);

// Morphology on masks, 3x3 structuring element.
RegionMask dilate3(const RegionMask& m);
RegionMask erode3(const RegionMask& m);
RegionMask close3(const RegionMask& m);
RegionMask complement(const RegionMask& m);

double mask_iou(const RegionMask& a, const RegionMask& b);

// Number of 4-neighbor label transitions (discrete boundary length).
size_t mask_perimeter(const RegionMask& m);

RegionMask make_disc_mask(int w, int h, float cx, float cy, float radius);
RegionMask make_rect_mask(int w, int h, int x0, int y0, int x1, int y1);

}  // namespace qmd
