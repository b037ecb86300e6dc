#include "qmd/image.hpp"

#include <algorithm>

namespace qmd {

float sample_bilinear(const Image& img, float x, float y) {
    const int w = img.width, h = img.height;
    x = std::clamp(x, 0.0f, static_cast<float>(w - 1));
    y = std::clamp(y, 0.0f, static_cast<float>(h - 1));
    int x0 = static_cast<int>(x);
    int y0 = static_cast<int>(y);
    int x1 = std::min(x0 + 1, w - 1);
    int y1 = std::min(y0 + 1, h - 1);
    float fx = x - static_cast<float>(x0);
    float fy = y - static_cast<float>(y0);
    const float* p = img.px.data();
    float a = p[static_cast<size_t>(y0) * w + x0];
    float b = p[static_cast<size_t>(y0) * w + x1];
    float c = p[static_cast<size_t>(y1) * w + x0];
    float d = p[static_cast<size_t>(y1) * w + x1];
    return (a * (1.0f - fx) + b * fx) * (1.0f - fy) + (c * (1.0f - fx) + d * fx) * fy;
}

static std::vector<float> gaussian_kernel(float sigma) {
    int radius = std::max(1, static_cast<int>(std::ceil(3.0f * sigma)));
    std::vector<float> k(static_cast<size_t>(2 * radius + 1));
    float sum = 0.0f;
    for (int i = -radius; i <= radius; ++i) {
        float v = std::exp(-0.5f * static_cast<float>(i) * static_cast<float>(i) / (sigma * sigma));
        k[static_cast<size_t>(i + radius)] = v;
        sum += v;
    }
    for (float& v : k) v /= sum;
    return k;
}

static int reflect(int i, int n) {
    if (n == 1) return 0;
    while (i < 0 || i >= n) {
        if (i < 0) i = -i - 1;
        if (i >= n) i = 2 * n - 1 - i;
    }
    return i;
}

void gaussian_blur_inplace(Image& img, float sigma) {
    if (sigma <= 0.0f || img.width == 0 || img.height == 0) return;
    const auto k = gaussian_kernel(sigma);
    const int radius = (static_cast<int>(k.size()) - 1) / 2;
    const int w = img.width, h = img.height;
    Image tmp(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            float acc = 0.0f;
            for (int i = -radius; i <= radius; ++i)
                acc += k[static_cast<size_t>(i + radius)] * img.at(reflect(x + i, w), y);
            tmp.at(x, y) = acc;
        }
    }
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            float acc = 0.0f;
            for (int i = -radius; i <= radius; ++i)
                acc += k[static_cast<size_t>(i + radius)] * tmp.at(x, reflect(y + i, h));
            img.at(x, y) = acc;
        }
    }
}

Image gaussian_blur(const Image& img, float sigma) {
    Image out = img;
    gaussian_blur_inplace(out, sigma);
    return out;
}

Image box_blur3(const Image& img) {
    const int w = img.width, h = img.height;
    Image out(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            float acc = 0.0f;
            int cnt = 0;
            for (int dy = -1; dy <= 1; ++dy) {
                for (int dx = -1; dx <= 1; ++dx) {
                    int xx = x + dx, yy = y + dy;
                    if (xx < 0 || yy < 0 || xx >= w || yy >= h) continue;
                    acc += img.at(xx, yy);
                    ++cnt;
                }
            }
            out.at(x, y) = acc / static_cast<float>(cnt);
        }
    }
    return out;
}

void gradients(const Image& img, Image& gx, Image& gy) {
    const int w = img.width, h = img.height;
    gx = Image(w, h);
    gy = Image(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            int xm = std::max(x - 1, 0), xp = std::min(x + 1, w - 1);
            int ym = std::max(y - 1, 0), yp = std::min(y + 1, h - 1);
            gx.at(x, y) = 0.5f * (img.at(xp, y) - img.at(xm, y));
            gy.at(x, y) = 0.5f * (img.at(x, yp) - img.at(x, ym));
        }
    }
}

Image resize_bilinear(const Image& img, int new_w, int new_h) {
    Image out(new_w, new_h);
    if (img.width == 0 || img.height == 0) return out;
    const float sx = new_w > 1 ? static_cast<float>(img.width - 1) / static_cast<float>(new_w - 1) : 0.0f;
    const float sy = new_h > 1 ? static_cast<float>(img.height - 1) / static_cast<float>(new_h - 1) : 0.0f;
    for (int y = 0; y < new_h; ++y)
        for (int x = 0; x < new_w; ++x)
            out.at(x, y) = sample_bilinear(img, static_cast<float>(x) * sx, static_cast<float>(y) * sy);
    return out;
}

Image downsample_half(const Image& img) {
    Image blurred = gaussian_blur(img, 1.0f);
    int nw = std::max(1, img.width / 2);
    int nh = std::max(1, img.height / 2);
    return resize_bilinear(blurred, nw, nh);
}

std::vector<Image> build_pyramid(const Image& img, int levels, float scale_factor,
                                 int min_dim) {
    std::vector<Image> pyr;
    pyr.push_back(img);
    for (int l = 1; l < levels; ++l) {
        const Image& prev = pyr.back();
        int nw = static_cast<int>(std::lround(prev.width * scale_factor));
        int nh = static_cast<int>(std::lround(prev.height * scale_factor));
        if (nw < min_dim || nh < min_dim) break;
        Image blurred = gaussian_blur(prev, 1.0f / scale_factor * 0.5f);
        pyr.push_back(resize_bilinear(blurred, nw, nh));
    }
    return pyr;
}

RegionMask dilate3(const RegionMask& m) {
    RegionMask out(m.width, m.height);
    out.frame_index = m.frame_index;
    out.degenerate_seed = m.degenerate_seed;
    for (int y = 0; y < m.height; ++y) {
        for (int x = 0; x < m.width; ++x) {
            uint8_t v = 0;
            for (int dy = -1; dy <= 1 && !v; ++dy)
                for (int dx = -1; dx <= 1 && !v; ++dx) {
                    int xx = x + dx, yy = y + dy;
                    if (xx < 0 || yy < 0 || xx >= m.width || yy >= m.height) continue;
                    v = m.at(xx, yy);
                }
            out.at(x, y) = v;
        }
    }
    return out;
}

RegionMask erode3(const RegionMask& m) {
    RegionMask out(m.width, m.height);
    out.frame_index = m.frame_index;
    out.degenerate_seed = m.degenerate_seed;
    for (int y = 0; y < m.height; ++y) {
        for (int x = 0; x < m.width; ++x) {
            uint8_t v = 1;
            for (int dy = -1; dy <= 1 && v; ++dy)
                for (int dx = -1; dx <= 1 && v; ++dx) {
                    int xx = x + dx, yy = y + dy;
                    if (xx < 0 || yy < 0 || xx >= m.width || yy >= m.height) continue;
                    if (!m.at(xx, yy)) v = 0;
                }
            out.at(x, y) = v;
        }
    }
    return out;
}

RegionMask close3(const RegionMask& m) { return erode3(dilate3(m)); }

RegionMask complement(const RegionMask& m) {
    RegionMask out = m;
    for (auto& b : out.bits) b = b ? 0 : 1;
    return out;
}

double mask_iou(const RegionMask& a, const RegionMask& b) {
    assert(a.width == b.width && a.height == b.height);
    size_t inter = 0, uni = 0;
    for (size_t i = 0; i < a.bits.size(); ++i) {
        bool pa = a.bits[i] != 0, pb = b.bits[i] != 0;
        inter += pa && pb;
        uni += pa || pb;
    }
    if (uni == 0) return 1.0;
    return static_cast<double>(inter) / static_cast<double>(uni);
}

size_t mask_perimeter(const RegionMask& m) {
    size_t p = 0;
    for (int y = 0; y < m.height; ++y) {
        for (int x = 0; x < m.width; ++x) {
            if (x + 1 < m.width && m.at(x, y) != m.at(x + 1, y)) ++p;
            if (y + 1 < m.height && m.at(x, y) != m.at(x, y + 1)) ++p;
        }
    }
    return p;
}

RegionMask make_disc_mask(int w, int h, float cx, float cy, float radius) {
    RegionMask m(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            float dx = static_cast<float>(x) - cx, dy = static_cast<float>(y) - cy;
            if (dx * dx + dy * dy <= radius * radius) m.at(x, y) = 1;
        }
    return m;
}

RegionMask make_rect_mask(int w, int h, int x0, int y0, int x1, int y1) {
    RegionMask m(w, h);
    for (int y = std::max(0, y0); y <= std::min(h - 1, y1); ++y)
        for (int x = std::max(0, x0); x <= std::min(w - 1, x1); ++x) m.at(x, y) = 1;
    return m;
}

}  // namespace qmd
