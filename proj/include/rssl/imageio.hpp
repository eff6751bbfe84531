#pragma once

#include <string>

#include "rssl/patching.hpp"

namespace rssl {

// Reads a grayscale image from a binary PGM (P5) or an 8-bit non-interlaced
// PNG (gray, gray+alpha, RGB or RGBA; alpha ignored, color converted with
// luma weights 0.299/0.587/0.114).  Intensities are mapped to [0, 1] by the
// file's maximum sample value.  The parser never crashes on malformed bytes;
// it throws FormatError (with a byte offset for PGM) or IoError.
GrayImage read_gray(const std::string& path);

// parse from an in-memory buffer; format chosen like read_gray
GrayImage decode_gray(const std::string& bytes, const std::string& name);

// Writes a binary mask as PGM P5, 0 for background and 255 for foreground.
void write_mask(const std::string& path, const BinaryImage& mask);

// Writes a [0,1] image as PGM P5 with maxval 255 (values rounded).
void write_gray_pgm(const std::string& path, const GrayImage& img);

// mask[i] = 1 iff img[i] > 0.5; used to load masks written by write_mask
BinaryImage threshold_to_mask(const GrayImage& img);

} // namespace rssl
