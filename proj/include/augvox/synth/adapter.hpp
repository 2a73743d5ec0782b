// include/augvox/synth/adapter.hpp

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

#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <mutex>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_set>
#include <vector>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "augvox/audio/resample.hpp"
#include "augvox/audio/wav.hpp"
#include "augvox/common.hpp"
#include "augvox/synth/controls.hpp"
#include "augvox/util/fs.hpp"
#include "augvox/util/kvfile.hpp"

namespace augvox::synth {

struct SpeakerRef {
  std::string speaker_id;
  std::filesystem::path reference_wav;
};

struct SpeakerPool {
  std::vector<SpeakerRef> refs;
};

inline void validate(const SpeakerPool& pool) {
  require(!pool.refs.empty(), "speaker pool is empty");
  std::unordered_set<std::string> seen;
  for (const auto& ref : pool.refs)
    require(seen.insert(ref.speaker_id).second,
            "speaker pool: duplicate speaker id \"", ref.speaker_id, "\"");
}

// Pool index: one `speaker_id <path>` per line, '#' comments; paths resolve
// against the index file's directory.
inline SpeakerPool load_speaker_pool(const std::filesystem::path& index_path) {
  SpeakerPool pool;
  const auto root = index_path.parent_path();
  const std::string text = fsutil::read_text_file(index_path);
  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string raw = nl == std::string::npos ? text.substr(pos)
                                              : text.substr(pos, nl - pos);
    pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const std::string line = kvfile::trim(raw);
    if (line.empty() || line[0] == '#') continue;
    const auto ws = line.find_first_of(" \t");
    require(ws != std::string::npos, index_path.string(), ":", line_no,
            ": expected `speaker_id path`");
    SpeakerRef ref;
    ref.speaker_id = line.substr(0, ws);
    ref.reference_wav = root / kvfile::trim(line.substr(ws + 1));
    pool.refs.push_back(std::move(ref));
  }
  validate(pool);
  return pool;
}

// One reference per distinct speaker, first occurrence wins; lets any
// manifest double as a speaker pool.
template <typename ManifestT>
inline SpeakerPool pool_from_manifest(const ManifestT& manifest) {
  SpeakerPool pool;
  std::unordered_set<std::string> seen;
  for (const auto& utt : manifest.utterances) {
    if (!seen.insert(utt.speaker_id).second) continue;
    pool.refs.push_back({utt.speaker_id, utt.audio_path});
  }
  validate(pool);
  return pool;
}

enum class AdapterMode { stub, subprocess, http };

inline std::string to_string(AdapterMode m) {
  switch (m) {
    case AdapterMode::stub: return "stub";
    case AdapterMode::subprocess: return "subprocess";
    case AdapterMode::http: return "http";
  }
  raise("unknown adapter mode");
}

inline AdapterMode adapter_mode_from_string(const std::string& s) {
  if (s == "stub") return AdapterMode::stub;
  if (s == "subprocess") return AdapterMode::subprocess;
  if (s == "http") return AdapterMode::http;
  raise("unknown adapter mode \"", s, "\"");
}

// Bridge to an external synthesis or conversion system. The command field is
// a shell template for subprocess mode ({text}, {speaker_ref}, {source_wav},
// {L}, {T}, {Tdp}, {out} placeholders), a URL for http mode, and a generator
// grammar for stub mode:
//   fixed:<seconds>    tone of that exact duration
//   scaled[:<base>]    tone of base * L seconds (base * source duration for
//                      conversion), default base 1
//   passthrough        echoes the reference / source audio unchanged
// Stub tone frequency encodes hash(text, speaker), so output audio witnesses
// which inputs actually reached the adapter.
struct AdapterSpec {
  AdapterMode mode = AdapterMode::stub;
  std::string endpoint_or_command = "scaled";
  double timeout_s = 60.0;
  std::filesystem::path call_log;  // stub only: one line appended per call
};

// Adapter file: `schema = 1`, mode, command (alias endpoint), timeout_s,
// call_log. The log path resolves against the spec file's directory.
inline AdapterSpec load_adapter_spec(const std::filesystem::path& path) {
  const std::string origin = path.string();
  const auto entries = kvfile::parse_kv_text(fsutil::read_text_file(path), origin);
  AdapterSpec spec;
  for (const auto& e : entries) {
    if (e.key == "mode") {
      spec.mode = adapter_mode_from_string(e.value);
    } else if (e.key == "command" || e.key == "endpoint") {
      spec.endpoint_or_command = e.value;
    } else if (e.key == "timeout_s") {
      spec.timeout_s = kvfile::to_double(e, origin);
      require(spec.timeout_s > 0.0, origin, ":", e.line,
              ": timeout_s must be positive");
    } else if (e.key == "call_log") {
      spec.call_log = path.parent_path() / e.value;
    } else {
      raise(origin, ":", e.line, ": unknown adapter key `", e.key, "`");
    }
  }
  return spec;
}

namespace adapter_detail {

inline std::uint64_t hash64(std::string_view a, std::string_view b) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  const auto mix = [&](std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    h ^= 0xff;
    h *= 0x100000001b3ULL;
  };
  mix(a);
  mix(b);
  return h;
}

inline std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'')
      out += "'\\''";
    else
      out += c;
  }
  out += "'";
  return out;
}

inline std::string substitute(std::string tmpl, const std::string& key,
                              const std::string& value) {
  const std::string token = "{" + key + "}";
  std::size_t pos;
  while ((pos = tmpl.find(token)) != std::string::npos)
    tmpl.replace(pos, token.size(), value);
  return tmpl;
}

inline void require_placeholder(const std::string& tmpl, const char* name) {
  require(tmpl.find(cat("{", name, "}")) != std::string::npos,
          "adapter command template is missing the {", name, "} placeholder");
}

// Runs `cmd` through /bin/sh, killing it once the deadline passes. The
// child's stderr stays attached to ours, which is where adapter diagnostics
// land.
inline void run_command(const std::string& cmd, double timeout_s) {
  const pid_t pid = fork();
  require(pid >= 0, "fork failed for adapter command");
  if (pid == 0) {
    execl("/bin/sh", "sh", "-c", cmd.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  const auto deadline = std::chrono::steady_clock::now() +
                        std::chrono::duration<double>(timeout_s);
  int status = 0;
  while (true) {
    const pid_t done = waitpid(pid, &status, WNOHANG);
    if (done == pid) break;
    require(done == 0, "waitpid failed for adapter command");
    if (std::chrono::steady_clock::now() >= deadline) {
      kill(pid, SIGKILL);
      waitpid(pid, &status, 0);
      raise("adapter timed out after ", timeout_s, " s: ", cmd);
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(5));
  }
  if (WIFSIGNALED(status))
    raise("adapter killed by signal ", WTERMSIG(status), ": ", cmd);
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  require(code == 0, "adapter exited with status ", code, ": ", cmd);
}

inline std::string base64_encode(const std::vector<std::uint8_t>& data) {
  static const char alphabet[] =
      "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
  std::string out;
  out.reserve((data.size() + 2) / 3 * 4);
  for (std::size_t i = 0; i < data.size(); i += 3) {
    std::uint32_t block = static_cast<std::uint32_t>(data[i]) << 16;
    if (i + 1 < data.size()) block |= static_cast<std::uint32_t>(data[i + 1]) << 8;
    if (i + 2 < data.size()) block |= data[i + 2];
    out += alphabet[(block >> 18) & 63];
    out += alphabet[(block >> 12) & 63];
    out += i + 1 < data.size() ? alphabet[(block >> 6) & 63] : '=';
    out += i + 2 < data.size() ? alphabet[block & 63] : '=';
  }
  return out;
}

inline std::mutex& call_log_mutex() {
  static std::mutex m;
  return m;
}

inline void log_call(const AdapterSpec& spec, const nlohmann::json& record) {
  if (spec.call_log.empty()) return;
  const std::lock_guard<std::mutex> lock(call_log_mutex());
  std::ofstream out(spec.call_log, std::ios::app);
  out << record.dump() << "\n";
}

inline audio::AudioClip stub_tone(std::uint64_t key_hash, double dur_s, int rate) {
  require(dur_s > 0.0, "stub adapter: nonpositive duration");
  const double freq = 200.0 + static_cast<double>(key_hash % 1800);
  const std::size_t n = static_cast<std::size_t>(std::llround(dur_s * rate));
  audio::AudioClip clip;
  clip.sample_rate = rate;
  clip.samples.resize(n);
  const double w = 2.0 * 3.14159265358979323846 * freq / rate;
  for (std::size_t i = 0; i < n; ++i) clip.samples[i] = 0.5 * std::sin(w * i);
  return clip;
}

struct StubGrammar {
  enum class Kind { fixed, scaled, passthrough } kind = Kind::scaled;
  double value = 1.0;  // fixed: duration in seconds; scaled: base factor
};

inline StubGrammar parse_stub_grammar(const std::string& command) {
  StubGrammar g;
  if (command == "passthrough") {
    g.kind = StubGrammar::Kind::passthrough;
    return g;
  }
  const auto colon = command.find(':');
  const std::string head = command.substr(0, colon);
  if (head == "fixed") {
    require(colon != std::string::npos, "stub grammar `fixed` needs a duration, "
            "e.g. fixed:1.0");
    g.kind = StubGrammar::Kind::fixed;
  } else if (head == "scaled") {
    g.kind = StubGrammar::Kind::scaled;
  } else {
    raise("unknown stub grammar \"", command, "\"");
  }
  if (colon != std::string::npos) {
    try {
      std::size_t used = 0;
      g.value = std::stod(command.substr(colon + 1), &used);
      require(used == command.size() - colon - 1 && g.value > 0.0, "bad value");
    } catch (const std::exception&) {
      raise("stub grammar \"", command, "\": expected a positive number after ':'");
    }
  }
  return g;
}

// Checks the adapter gave us something usable, then moves it to the pipeline
// rate.
inline audio::AudioClip accept_output(audio::AudioClip clip, int working_rate) {
  require(!clip.samples.empty(), "adapter returned empty audio");
  for (double s : clip.samples)
    require(std::isfinite(s), "adapter returned non-finite samples");
  return audio::resample(std::move(clip), working_rate);
}

inline audio::AudioClip http_post(const AdapterSpec& spec,
                                  const nlohmann::json& body) {
  const std::string& url = spec.endpoint_or_command;
  require(url.rfind("http://", 0) == 0,
          "http adapter endpoint must start with http:// (got \"", url, "\")");
  const std::string rest = url.substr(7);
  const auto slash = rest.find('/');
  const std::string hostport =
      slash == std::string::npos ? rest : rest.substr(0, slash);
  const std::string target =
      slash == std::string::npos ? std::string("/") : rest.substr(slash);
  std::string host = hostport;
  int port = 80;
  if (const auto colon = hostport.rfind(':'); colon != std::string::npos) {
    host = hostport.substr(0, colon);
    try {
      port = std::stoi(hostport.substr(colon + 1));
    } catch (const std::exception&) {
      raise("http adapter endpoint has a bad port: \"", url, "\"");
    }
  }
  require(!host.empty(), "http adapter endpoint has no host: \"", url, "\"");

  httplib::Client client(host, port);
  const auto sec = static_cast<time_t>(spec.timeout_s);
  const auto usec = static_cast<time_t>((spec.timeout_s - sec) * 1e6);
  client.set_connection_timeout(sec, usec);
  client.set_read_timeout(sec, usec);
  client.set_write_timeout(sec, usec);

  const auto res = client.Post(target, body.dump(), "application/json");
  require(static_cast<bool>(res), "adapter unreachable at ", url, ": ",
          httplib::to_string(res.error()));
  if (res->status != 200) {
    std::string snippet = res->body.substr(0, 200);
    raise("adapter returned HTTP ", res->status, " from ", url, ": ", snippet);
  }
  const std::vector<std::uint8_t> bytes(res->body.begin(), res->body.end());
  return audio::parse_wav(bytes, "adapter response");
}

}  // namespace adapter_detail

// Text-to-speech through the configured adapter. The returned clip is
// validated and resampled to working_rate.
inline audio::AudioClip synthesize(const AdapterSpec& spec, const std::string& text,
                                   const SpeakerRef& speaker,
                                   const SynthesisControls& controls,
                                   int working_rate = 16000) {
  validate(controls);
  require(!kvfile::trim(text).empty(), "synthesize: empty text");

  switch (spec.mode) {
    case AdapterMode::stub: {
      adapter_detail::log_call(spec, {{"op", "tts"},
                                      {"text", text},
                                      {"speaker", speaker.speaker_id},
                                      {"L", controls.length_scale},
                                      {"T", controls.temperature},
                                      {"T_dp", controls.duration_temperature}});
      const auto grammar = adapter_detail::parse_stub_grammar(spec.endpoint_or_command);
      const std::uint64_t key = adapter_detail::hash64(text, speaker.speaker_id);
      switch (grammar.kind) {
        case adapter_detail::StubGrammar::Kind::passthrough:
          return adapter_detail::accept_output(audio::load_wav(speaker.reference_wav),
                                               working_rate);
        case adapter_detail::StubGrammar::Kind::fixed:
          return adapter_detail::accept_output(
              adapter_detail::stub_tone(key, grammar.value, working_rate),
              working_rate);
        case adapter_detail::StubGrammar::Kind::scaled:
          return adapter_detail::accept_output(
              adapter_detail::stub_tone(key, grammar.value * controls.length_scale,
                                        working_rate),
              working_rate);
      }
      raise("unreachable");
    }
    case AdapterMode::subprocess: {
      adapter_detail::require_placeholder(spec.endpoint_or_command, "text");
      adapter_detail::require_placeholder(spec.endpoint_or_command, "out");
      fsutil::TempDir tmp("augvox-tts");
      const auto out_path = (tmp.path() / "out.wav").string();
      std::string cmd = spec.endpoint_or_command;
      using adapter_detail::shell_quote;
      using adapter_detail::substitute;
      cmd = substitute(cmd, "text", shell_quote(text));
      cmd = substitute(cmd, "speaker_ref", shell_quote(speaker.reference_wav.string()));
      cmd = substitute(cmd, "L", cat(controls.length_scale));
      cmd = substitute(cmd, "T", cat(controls.temperature));
      cmd = substitute(cmd, "Tdp", cat(controls.duration_temperature));
      cmd = substitute(cmd, "out", shell_quote(out_path));
      adapter_detail::run_command(cmd, spec.timeout_s);
      return adapter_detail::accept_output(audio::load_wav(out_path), working_rate);
    }
    case AdapterMode::http: {
      nlohmann::json body{{"text", text},
                          {"L", controls.length_scale},
                          {"T", controls.temperature},
                          {"Tdp", controls.duration_temperature}};
      body["speaker_ref"] = adapter_detail::base64_encode(
          fsutil::read_binary_file(speaker.reference_wav));
      return adapter_detail::accept_output(adapter_detail::http_post(spec, body),
                                           working_rate);
    }
  }
  raise("unknown adapter mode");
}

// Voice conversion: re-render source in the target speaker's voice.
inline audio::AudioClip convert_voice(const AdapterSpec& spec,
                                      const audio::AudioClip& source,
                                      const SpeakerRef& target,
                                      int working_rate = 16000) {
  audio::validate(source);

  switch (spec.mode) {
    case AdapterMode::stub: {
      adapter_detail::log_call(spec, {{"op", "vc"}, {"speaker", target.speaker_id}});
      const auto grammar = adapter_detail::parse_stub_grammar(spec.endpoint_or_command);
      const std::uint64_t key = adapter_detail::hash64("vc", target.speaker_id);
      switch (grammar.kind) {
        case adapter_detail::StubGrammar::Kind::passthrough:
          return adapter_detail::accept_output(source, working_rate);
        case adapter_detail::StubGrammar::Kind::fixed:
          return adapter_detail::accept_output(
              adapter_detail::stub_tone(key, grammar.value, working_rate),
              working_rate);
        case adapter_detail::StubGrammar::Kind::scaled:
          return adapter_detail::accept_output(
              adapter_detail::stub_tone(key, grammar.value * source.duration_s(),
                                        working_rate),
              working_rate);
      }
      raise("unreachable");
    }
    case AdapterMode::subprocess: {
      adapter_detail::require_placeholder(spec.endpoint_or_command, "source_wav");
      adapter_detail::require_placeholder(spec.endpoint_or_command, "out");
      fsutil::TempDir tmp("augvox-vc");
      const auto src_path = (tmp.path() / "src.wav").string();
      const auto out_path = (tmp.path() / "out.wav").string();
      audio::save_wav(source, src_path);
      std::string cmd = spec.endpoint_or_command;
      using adapter_detail::shell_quote;
      using adapter_detail::substitute;
      cmd = substitute(cmd, "source_wav", shell_quote(src_path));
      cmd = substitute(cmd, "speaker_ref", shell_quote(target.reference_wav.string()));
      cmd = substitute(cmd, "out", shell_quote(out_path));
      adapter_detail::run_command(cmd, spec.timeout_s);
      return adapter_detail::accept_output(audio::load_wav(out_path), working_rate);
    }
    case AdapterMode::http: {
      nlohmann::json body;
      body["source_wav"] = adapter_detail::base64_encode(
          audio::encode_wav(source, audio::WavEncoding::pcm16));
      body["speaker_ref"] = adapter_detail::base64_encode(
          fsutil::read_binary_file(target.reference_wav));
      return adapter_detail::accept_output(adapter_detail::http_post(spec, body),
                                           working_rate);
    }
  }
  raise("unknown adapter mode");
}

}  // namespace augvox::synth
