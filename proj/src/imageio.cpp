#include "rssl/imageio.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

#include <zlib.h>

#include "rssl/errors.hpp"

namespace rssl {

namespace {

double luma(double r, double g, double b) { return 0.299 * r + 0.587 * g + 0.114 * b; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("read failed on " + path);
    return bytes;
}

// ---- PGM (P5) ----

struct PgmCursor {
    const std::string& bytes;
    size_t pos = 0;

    int peek() const { return pos < bytes.size() ? static_cast<unsigned char>(bytes[pos]) : -1; }
    int get() { return pos < bytes.size() ? static_cast<unsigned char>(bytes[pos++]) : -1; }

    void skip_space_and_comments() {
        for (;;) {
            int c = peek();
            if (c == '#') {
                while (c != -1 && c != '\n') c = get();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                get();
            } else {
                return;
            }
        }
    }

    uint64_t read_uint(const char* what) {
        skip_space_and_comments();
        if (peek() < '0' || peek() > '9')
            throw FormatError(std::string("PGM: expected ") + what, pos);
        uint64_t v = 0;
        while (peek() >= '0' && peek() <= '9') {
            v = v * 10 + static_cast<uint64_t>(get() - '0');
            if (v > 0xffffffffULL) throw FormatError(std::string("PGM: ") + what + " overflows", pos);
        }
        return v;
    }
};

GrayImage decode_pgm(const std::string& bytes) {
    PgmCursor cur{bytes};
    if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5')
        throw FormatError("PGM: missing P5 magic", 0);
    cur.pos = 2;
    const uint64_t w = cur.read_uint("width");
    const uint64_t h = cur.read_uint("height");
    const uint64_t maxval = cur.read_uint("maxval");
    if (w == 0 || h == 0) throw FormatError("PGM: zero dimension", cur.pos);
    if (maxval == 0 || maxval > 255) throw FormatError("PGM: unsupported maxval", cur.pos);
    // single whitespace byte separates header and payload
    const int sep = cur.get();
    if (sep != ' ' && sep != '\t' && sep != '\r' && sep != '\n')
        throw FormatError("PGM: missing whitespace before pixel data", cur.pos);
    const uint64_t need = w * h;
    if (bytes.size() - cur.pos < need)
        throw FormatError("PGM: truncated pixel payload", bytes.size());
    GrayImage img(h, w);
    const double scale = 1.0 / static_cast<double>(maxval);
    for (uint64_t i = 0; i < need; ++i) {
        const auto v = static_cast<unsigned char>(bytes[cur.pos + i]);
        if (v > maxval) throw FormatError("PGM: sample exceeds maxval", cur.pos + i);
        img.data[i] = static_cast<double>(v) * scale;
    }
    return img;
}

// ---- PNG (8-bit, non-interlaced) ----

uint32_t be32(const unsigned char* p) {
    return (uint32_t(p[0]) << 24) | (uint32_t(p[1]) << 16) | (uint32_t(p[2]) << 8) | uint32_t(p[3]);
}

std::string zlib_inflate(const std::string& in, size_t expected) {
    std::string out(expected, '\0');
    z_stream zs;
    std::memset(&zs, 0, sizeof(zs));
    if (inflateInit(&zs) != Z_OK) throw FormatError("PNG: inflate init failed");
    zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(in.data()));
    zs.avail_in = static_cast<uInt>(in.size());
    zs.next_out = reinterpret_cast<Bytef*>(out.data());
    zs.avail_out = static_cast<uInt>(out.size());
    const int rc = inflate(&zs, Z_FINISH);
    const size_t produced = out.size() - zs.avail_out;
    inflateEnd(&zs);
    if (rc != Z_STREAM_END || produced != expected)
        throw FormatError("PNG: corrupt or short compressed stream");
    return out;
}

int paeth(int a, int b, int c) {
    const int p = a + b - c;
    const int pa = std::abs(p - a), pb = std::abs(p - b), pc = std::abs(p - c);
    if (pa <= pb && pa <= pc) return a;
    if (pb <= pc) return b;
    return c;
}

GrayImage decode_png(const std::string& bytes) {
    static const unsigned char sig[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
    if (bytes.size() < 8 || std::memcmp(bytes.data(), sig, 8) != 0)
        throw FormatError("PNG: bad signature");

    size_t pos = 8;
    uint32_t w = 0, h = 0;
    int channels = 0;
    bool have_ihdr = false, have_iend = false;
    std::string idat;
    while (pos + 8 <= bytes.size()) {
        const auto* p = reinterpret_cast<const unsigned char*>(bytes.data() + pos);
        const uint32_t len = be32(p);
        const std::string type = bytes.substr(pos + 4, 4);
        if (pos + 12 + static_cast<size_t>(len) > bytes.size())
            throw FormatError("PNG: truncated chunk");
        const char* data = bytes.data() + pos + 8;
        if (type == "IHDR") {
            if (len != 13) throw FormatError("PNG: bad IHDR length");
            w = be32(reinterpret_cast<const unsigned char*>(data));
            h = be32(reinterpret_cast<const unsigned char*>(data + 4));
            const int depth = static_cast<unsigned char>(data[8]);
            const int color = static_cast<unsigned char>(data[9]);
            const int interlace = static_cast<unsigned char>(data[12]);
            if (w == 0 || h == 0) throw FormatError("PNG: zero dimension");
            if (depth != 8) throw FormatError("PNG: only 8-bit depth supported");
            if (interlace != 0) throw FormatError("PNG: interlaced images not supported");
            switch (color) {
                case 0: channels = 1; break;
                case 2: channels = 3; break;
                case 4: channels = 2; break;
                case 6: channels = 4; break;
                default: throw FormatError("PNG: palette/unknown color type not supported");
            }
            have_ihdr = true;
        } else if (type == "IDAT") {
            if (!have_ihdr) throw FormatError("PNG: IDAT before IHDR");
            idat.append(data, len);
        } else if (type == "IEND") {
            have_iend = true;
            break;
        }
        pos += 12 + static_cast<size_t>(len);
    }
    if (!have_ihdr || !have_iend) throw FormatError("PNG: missing IHDR or IEND");
    if (idat.empty()) throw FormatError("PNG: no image data");

    const size_t stride = static_cast<size_t>(w) * static_cast<size_t>(channels);
    if (h != 0 && stride + 1 > (SIZE_MAX / h)) throw FormatError("PNG: image too large");
    const std::string raw = zlib_inflate(idat, static_cast<size_t>(h) * (stride + 1));

    std::vector<unsigned char> pix(static_cast<size_t>(h) * stride);
    const int bpp = channels; // 8-bit samples
    for (size_t row = 0; row < h; ++row) {
        const auto* src = reinterpret_cast<const unsigned char*>(raw.data() + row * (stride + 1));
        const int filter = src[0];
        unsigned char* dst = pix.data() + row * stride;
        const unsigned char* prev = row > 0 ? pix.data() + (row - 1) * stride : nullptr;
        for (size_t i = 0; i < stride; ++i) {
            const int x = src[1 + i];
            const int a = i >= static_cast<size_t>(bpp) ? dst[i - bpp] : 0;
            const int b = prev ? prev[i] : 0;
            const int c = (prev && i >= static_cast<size_t>(bpp)) ? prev[i - bpp] : 0;
            int v;
            switch (filter) {
                case 0: v = x; break;
                case 1: v = x + a; break;
                case 2: v = x + b; break;
                case 3: v = x + (a + b) / 2; break;
                case 4: v = x + paeth(a, b, c); break;
                default: throw FormatError("PNG: unknown filter type");
            }
            dst[i] = static_cast<unsigned char>(v & 0xff);
        }
    }

    GrayImage img(h, w);
    for (size_t row = 0; row < h; ++row)
        for (size_t col = 0; col < w; ++col) {
            const unsigned char* px = pix.data() + row * stride + col * channels;
            double v;
            if (channels >= 3)
                v = luma(px[0] / 255.0, px[1] / 255.0, px[2] / 255.0);
            else
                v = px[0] / 255.0;
            img.at(row, col) = v;
        }
    return img;
}

} // namespace

GrayImage decode_gray(const std::string& bytes, const std::string& name) {
    auto dot = name.find_last_of('.');
    std::string ext = dot == std::string::npos ? "" : name.substr(dot + 1);
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    if (ext == "png") return decode_png(bytes);
    if (ext == "pgm") return decode_pgm(bytes);
    throw FormatError("unsupported image extension: " + name);
}

GrayImage read_gray(const std::string& path) { return decode_gray(read_file(path), path); }

void write_mask(const std::string& path, const BinaryImage& mask) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << "P5\n" << mask.width << " " << mask.height << "\n255\n";
    std::string payload(mask.data.size(), '\0');
    for (size_t i = 0; i < mask.data.size(); ++i)
        payload[i] = mask.data[i] ? static_cast<char>(0xff) : static_cast<char>(0x00);
    out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    if (!out) throw IoError("write failed on " + path);
}

void write_gray_pgm(const std::string& path, const GrayImage& img) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << "P5\n" << img.width << " " << img.height << "\n255\n";
    std::string payload(img.data.size(), '\0');
    for (size_t i = 0; i < img.data.size(); ++i) {
        const double v = std::min(1.0, std::max(0.0, img.data[i]));
        payload[i] = static_cast<char>(std::lround(v * 255.0));
    }
    out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    if (!out) throw IoError("write failed on " + path);
}

BinaryImage threshold_to_mask(const GrayImage& img) {
    BinaryImage mask(img.height, img.width);
    for (size_t i = 0; i < img.data.size(); ++i) mask.data[i] = img.data[i] > 0.5 ? 1 : 0;
    return mask;
}

} // namespace rssl
