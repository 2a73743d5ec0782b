// include/augvox/audio/wav.hpp

// Copyright 2026  The augvox authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

#include "augvox/audio/clip.hpp"
#include "augvox/common.hpp"
#include "augvox/util/fs.hpp"

// RIFF/WAVE reader and writer. Little-endian 16-bit integer PCM and 32-bit
// IEEE float are supported; everything else is rejected with the encoding
// named in the error. Multi-channel input is averaged down to mono on load.

namespace augvox::audio {

enum class WavEncoding { pcm16, float32 };

struct WavInfo {
  int sample_rate = 0;
  int channels = 0;
  std::uint64_t frames = 0;
  double duration_s() const {
    return sample_rate > 0 ? static_cast<double>(frames) / sample_rate : 0.0;
  }
};

namespace wav_detail {

constexpr std::uint16_t kFormatPcm = 0x0001;
constexpr std::uint16_t kFormatFloat = 0x0003;
constexpr std::uint16_t kFormatAlaw = 0x0006;
constexpr std::uint16_t kFormatMulaw = 0x0007;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

inline std::uint32_t read_u32(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

inline std::uint16_t read_u16(const std::uint8_t* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

inline void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 24) & 0xff));
}

inline void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xff));
}

inline void put_tag(std::vector<std::uint8_t>& out, const char* tag) {
  out.insert(out.end(), tag, tag + 4);
}

struct ParsedHeader {
  std::uint16_t format = 0;
  std::uint16_t channels = 0;
  std::uint32_t sample_rate = 0;
  std::uint16_t bits_per_sample = 0;
  std::size_t data_offset = 0;
  std::size_t data_size = 0;
  bool have_fmt = false;
  bool have_data = false;
};

inline ParsedHeader parse_header(const std::vector<std::uint8_t>& bytes,
                                 const std::string& origin) {
  require(bytes.size() >= 12, origin, ": not a RIFF/WAVE file (too short)");
  require(std::memcmp(bytes.data(), "RIFF", 4) == 0 &&
              std::memcmp(bytes.data() + 8, "WAVE", 4) == 0,
          origin, ": not a RIFF/WAVE file");

  ParsedHeader h;
  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const char* id = reinterpret_cast<const char*>(bytes.data() + pos);
    const std::uint32_t chunk_size = read_u32(bytes.data() + pos + 4);
    const std::size_t body = pos + 8;
    require(body + chunk_size <= bytes.size(), origin, ": truncated chunk '",
            std::string(id, 4), "'");
    if (std::memcmp(id, "fmt ", 4) == 0) {
      require(chunk_size >= 16, origin, ": fmt chunk too small");
      h.format = read_u16(bytes.data() + body);
      h.channels = read_u16(bytes.data() + body + 2);
      h.sample_rate = read_u32(bytes.data() + body + 4);
      h.bits_per_sample = read_u16(bytes.data() + body + 14);
      if (h.format == kFormatExtensible) {
        // The real format code is the first word of the SubFormat GUID.
        require(chunk_size >= 40, origin, ": extensible fmt chunk too small");
        h.format = read_u16(bytes.data() + body + 24);
      }
      h.have_fmt = true;
    } else if (std::memcmp(id, "data", 4) == 0) {
      h.data_offset = body;
      h.data_size = chunk_size;
      h.have_data = true;
    }
    pos = body + chunk_size + (chunk_size & 1);  // chunks are word-aligned
  }
  require(h.have_fmt, origin, ": missing fmt chunk");
  require(h.have_data, origin, ": missing data chunk");
  require(h.channels > 0, origin, ": zero channels");
  require(h.sample_rate > 0, origin, ": zero sample rate");
  return h;
}

inline std::string encoding_name(std::uint16_t format, std::uint16_t bits) {
  switch (format) {
    case kFormatPcm:
      return cat(bits, "-bit PCM");
    case kFormatFloat:
      return cat(bits, "-bit float");
    case kFormatAlaw:
      return "a-law";
    case kFormatMulaw:
      return "mu-law";
    default:
      return cat("format code ", format);
  }
}

}  // namespace wav_detail

// Decodes a whole WAV image. Channels are averaged to mono and PCM samples
// mapped onto [-1, 1] by division with 32768.
inline AudioClip parse_wav(const std::vector<std::uint8_t>& bytes,
                           const std::string& origin = "<memory>") {
  using namespace wav_detail;
  const ParsedHeader h = parse_header(bytes, origin);

  const bool pcm16 = h.format == kFormatPcm && h.bits_per_sample == 16;
  const bool float32 = h.format == kFormatFloat && h.bits_per_sample == 32;
  require(pcm16 || float32, origin, ": unsupported WAV encoding: ",
          encoding_name(h.format, h.bits_per_sample));

  const std::size_t bytes_per_sample = pcm16 ? 2 : 4;
  const std::size_t frame_bytes = bytes_per_sample * h.channels;
  require(frame_bytes > 0 && h.data_size % frame_bytes == 0, origin,
          ": data chunk size is not a whole number of frames");
  const std::size_t frames = h.data_size / frame_bytes;
  require(frames > 0, origin, ": no audio frames");

  AudioClip clip;
  clip.sample_rate = static_cast<int>(h.sample_rate);
  clip.samples.resize(frames);
  const std::uint8_t* data = bytes.data() + h.data_offset;
  const double inv_channels = 1.0 / h.channels;
  for (std::size_t f = 0; f < frames; ++f) {
    double acc = 0.0;
    for (std::size_t c = 0; c < h.channels; ++c) {
      const std::uint8_t* p = data + (f * h.channels + c) * bytes_per_sample;
      if (pcm16) {
        const auto raw = static_cast<std::int16_t>(read_u16(p));
        acc += raw / 32768.0;
      } else {
        float v;
        std::uint32_t bits = read_u32(p);
        std::memcpy(&v, &bits, sizeof(v));
        require(std::isfinite(v), origin, ": non-finite float sample");
        acc += std::clamp(static_cast<double>(v), -1.0, 1.0);
      }
    }
    clip.samples[f] = acc * inv_channels;
  }
  return clip;
}

inline AudioClip load_wav(const std::filesystem::path& path) {
  return parse_wav(fsutil::read_binary_file(path), path.string());
}

// Header-only probe; does not decode samples.
inline WavInfo wav_info(const std::filesystem::path& path) {
  using namespace wav_detail;
  const auto bytes = fsutil::read_binary_file(path);
  const ParsedHeader h = parse_header(bytes, path.string());
  const std::size_t bps = h.bits_per_sample / 8;
  require(bps > 0, path.string(), ": zero bits per sample");
  WavInfo info;
  info.sample_rate = static_cast<int>(h.sample_rate);
  info.channels = h.channels;
  info.frames = h.data_size / (bps * h.channels);
  return info;
}

inline std::vector<std::uint8_t> encode_wav(const AudioClip& clip, WavEncoding encoding) {
  using namespace wav_detail;
  validate(clip);
  for (double s : clip.samples)
    require(s >= -1.0 && s <= 1.0,
            "encode_wav: samples outside [-1, 1]; normalize before saving");

  const bool pcm = encoding == WavEncoding::pcm16;
  const std::uint16_t bits = pcm ? 16 : 32;
  const std::uint16_t block_align = static_cast<std::uint16_t>(bits / 8);
  const std::uint32_t data_size =
      static_cast<std::uint32_t>(clip.samples.size() * block_align);
  // Non-PCM WAVE files carry a fact chunk with the frame count.
  const std::uint32_t fact_size = pcm ? 0 : 12;
  const std::uint32_t riff_size = 4 + (8 + 16) + fact_size + (8 + data_size);

  std::vector<std::uint8_t> out;
  out.reserve(12 + 24 + fact_size + 8 + data_size);
  put_tag(out, "RIFF");
  put_u32(out, riff_size);
  put_tag(out, "WAVE");
  put_tag(out, "fmt ");
  put_u32(out, 16);
  put_u16(out, pcm ? kFormatPcm : kFormatFloat);
  put_u16(out, 1);  // mono
  put_u32(out, static_cast<std::uint32_t>(clip.sample_rate));
  put_u32(out, static_cast<std::uint32_t>(clip.sample_rate) * block_align);
  put_u16(out, block_align);
  put_u16(out, bits);
  if (!pcm) {
    put_tag(out, "fact");
    put_u32(out, 4);
    put_u32(out, static_cast<std::uint32_t>(clip.samples.size()));
  }
  put_tag(out, "data");
  put_u32(out, data_size);
  for (double s : clip.samples) {
    if (pcm) {
      const long q = std::lround(s * 32768.0);
      const auto v = static_cast<std::int16_t>(std::clamp<long>(q, -32768, 32767));
      put_u16(out, static_cast<std::uint16_t>(v));
    } else {
      const float v = static_cast<float>(s);
      std::uint32_t raw;
      std::memcpy(&raw, &v, sizeof(raw));
      put_u32(out, raw);
    }
  }
  return out;
}

inline void save_wav(const AudioClip& clip, const std::filesystem::path& path,
                     WavEncoding encoding = WavEncoding::pcm16) {
  fsutil::write_binary_file(path, encode_wav(clip, encoding));
}

}  // namespace augvox::audio
