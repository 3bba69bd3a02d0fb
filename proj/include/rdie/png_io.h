// Copyright 2026 The RDIE Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// PNG input/output through libpng's simplified API. Only 8-bit gray and 8-bit
// RGB files are accepted; alpha, 16-bit and palette images are rejected.

#ifndef RDIE_PNG_IO_H_
#define RDIE_PNG_IO_H_

#include <png.h>

#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

#include "rdie/error.h"
#include "rdie/image.h"

namespace rdie {

namespace internal {

// Owns a png_image and releases libpng state on every exit path.
class PngImage {
 public:
  PngImage() {
    std::memset(&image_, 0, sizeof(image_));
    image_.version = PNG_IMAGE_VERSION;
  }
  ~PngImage() { png_image_free(&image_); }
  PngImage(const PngImage&) = delete;
  PngImage& operator=(const PngImage&) = delete;

  png_image* get() { return &image_; }
  png_image* operator->() { return &image_; }

  std::string message() const { return image_.message; }

 private:
  png_image image_;
};

}  // namespace internal

struct DecodedImage {
  bool is_rgb = false;
  GrayImage gray;  // set when !is_rgb
  RgbImage rgb;    // set when is_rgb
};

inline DecodedImage ReadPng(const std::string& path) {
  internal::PngImage png;
  if (!png_image_begin_read_from_file(png.get(), path.c_str())) {
    throw Error(ErrorKind::kIo, path + ": cannot decode PNG: " + png.message());
  }
  const png_uint_32 format = png->format;
  if (format & PNG_FORMAT_FLAG_ALPHA) {
    throw Error(ErrorKind::kIo, path + ": PNG with alpha channel is not supported");
  }
  if (format & PNG_FORMAT_FLAG_LINEAR) {
    throw Error(ErrorKind::kIo, path + ": 16-bit PNG is not supported");
  }
  if (format & PNG_FORMAT_FLAG_COLORMAP) {
    throw Error(ErrorKind::kIo, path + ": palette PNG is not supported");
  }
  const bool is_rgb = (format & PNG_FORMAT_FLAG_COLOR) != 0;
  png->format = is_rgb ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
  const int width = static_cast<int>(png->width);
  const int height = static_cast<int>(png->height);
  std::vector<uint8_t> buffer(PNG_IMAGE_SIZE(*png.get()));
  if (!png_image_finish_read(png.get(), nullptr, buffer.data(), 0, nullptr)) {
    throw Error(ErrorKind::kIo, path + ": cannot decode PNG: " + png.message());
  }
  DecodedImage out;
  out.is_rgb = is_rgb;
  if (!is_rgb) {
    out.gray = GrayImage(width, height, std::move(buffer));
    return out;
  }
  const size_t n = static_cast<size_t>(width) * height;
  std::vector<uint8_t> r(n), g(n), b(n);
  for (size_t i = 0; i < n; ++i) {
    r[i] = buffer[3 * i];
    g[i] = buffer[3 * i + 1];
    b[i] = buffer[3 * i + 2];
  }
  out.rgb = RgbImage{Plane<uint8_t>(width, height, std::move(r)),
                     Plane<uint8_t>(width, height, std::move(g)),
                     Plane<uint8_t>(width, height, std::move(b))};
  return out;
}

inline GrayImage ReadGrayPng(const std::string& path,
                             GrayMode mode = GrayMode::kLuma) {
  DecodedImage decoded = ReadPng(path);
  if (!decoded.is_rgb) return std::move(decoded.gray);
  return ToGrayscale(decoded.rgb, mode);
}

inline void WriteGrayPng(const std::string& path, const GrayImage& img) {
  internal::PngImage png;
  png->width = static_cast<png_uint_32>(img.width());
  png->height = static_cast<png_uint_32>(img.height());
  png->format = PNG_FORMAT_GRAY;
  if (!png_image_write_to_file(png.get(), path.c_str(), 0, img.values().data(),
                               0, nullptr)) {
    throw Error(ErrorKind::kIo, path + ": cannot write PNG: " + png.message());
  }
}

inline void WriteRgbPng(const std::string& path, const RgbImage& img) {
  std::vector<uint8_t> buffer(img.r.size() * 3);
  auto r = img.r.values();
  auto g = img.g.values();
  auto b = img.b.values();
  for (size_t i = 0; i < r.size(); ++i) {
    buffer[3 * i] = r[i];
    buffer[3 * i + 1] = g[i];
    buffer[3 * i + 2] = b[i];
  }
  internal::PngImage png;
  png->width = static_cast<png_uint_32>(img.r.width());
  png->height = static_cast<png_uint_32>(img.r.height());
  png->format = PNG_FORMAT_RGB;
  if (!png_image_write_to_file(png.get(), path.c_str(), 0, buffer.data(), 0,
                               nullptr)) {
    throw Error(ErrorKind::kIo, path + ": cannot write PNG: " + png.message());
  }
}

}  // namespace rdie

#endif  // RDIE_PNG_IO_H_
