//
// molga - genetic algorithms for molecular graphs
// SPDX-License-Identifier: Apache-2.0
//

#include "molga/oracles.h"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <csignal>
#include <cstdlib>
#include <cstring>
#include <mutex>
#include <set>

#include <fcntl.h>
#include <poll.h>
#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include "molga/canonical.h"
#include "molga/error.h"
#include "molga/fingerprint.h"
#include "molga/smiles.h"

namespace molga {
namespace {

std::string format_number(double v) {
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

double parse_number(std::string_view text, const std::string &what) {
  double v = 0.0;
  const char *begin = text.data();
  const char *end = text.data() + text.size();
  auto res = std::from_chars(begin, end, v);
  if (res.ec != std::errc() || res.ptr != end) {
    throw Error(ErrorCode::kConfigError, "bad number for " + what + ": '" +
                                             std::string(text) + "'");
  }
  return v;
}

// Child process speaking the line protocol.
class Subprocess {
 public:
  Subprocess(const std::string &command, std::chrono::milliseconds timeout)
      : command_(command), timeout_(timeout) {
    std::signal(SIGPIPE, SIG_IGN);
    int to_child[2];
    int from_child[2];
    if (pipe(to_child) != 0 || pipe(from_child) != 0) {
      throw Error(ErrorCode::kOracleFailure, "pipe(): " + std::string(std::strerror(errno)));
    }
    pid_ = fork();
    if (pid_ < 0) {
      throw Error(ErrorCode::kOracleFailure, "fork(): " + std::string(std::strerror(errno)));
    }
    if (pid_ == 0) {
      dup2(to_child[0], STDIN_FILENO);
      dup2(from_child[1], STDOUT_FILENO);
      close(to_child[0]);
      close(to_child[1]);
      close(from_child[0]);
      close(from_child[1]);
      execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char *>(nullptr));
      _exit(127);
    }
    close(to_child[0]);
    close(from_child[1]);
    write_fd_ = to_child[1];
    read_fd_ = from_child[0];
  }

  Subprocess(const Subprocess &) = delete;
  Subprocess &operator=(const Subprocess &) = delete;

  ~Subprocess() {
    if (write_fd_ >= 0) close(write_fd_);
    if (read_fd_ >= 0) close(read_fd_);
    if (pid_ > 0) {
      int status = 0;
      if (waitpid(pid_, &status, WNOHANG) == 0) {
        kill(pid_, SIGTERM);
        waitpid(pid_, &status, 0);
      }
    }
  }

  double query(const std::string &smiles) {
    std::lock_guard<std::mutex> lock(mutex_);
    const std::string line = smiles + "\n";
    std::size_t written = 0;
    while (written < line.size()) {
      const ssize_t w = ::write(write_fd_, line.data() + written, line.size() - written);
      if (w < 0) {
        if (errno == EINTR) continue;
        fail("cannot write to oracle process");
      }
      written += static_cast<std::size_t>(w);
    }
    const std::string reply = read_line();
    std::string_view trimmed = reply;
    while (!trimmed.empty() && (trimmed.back() == '\r' || trimmed.back() == ' ')) {
      trimmed.remove_suffix(1);
    }
    while (!trimmed.empty() && trimmed.front() == ' ') trimmed.remove_prefix(1);
    double v = 0.0;
    auto res = std::from_chars(trimmed.data(), trimmed.data() + trimmed.size(), v);
    if (trimmed.empty() || res.ec != std::errc() ||
        res.ptr != trimmed.data() + trimmed.size() || !std::isfinite(v)) {
      fail("non-numeric reply '" + reply + "' for " + smiles);
    }
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string &why) {
    throw Error(ErrorCode::kOracleFailure, "external oracle '" + command_ + "': " + why);
  }

  std::string read_line() {
    const auto deadline = std::chrono::steady_clock::now() + timeout_;
    while (true) {
      const auto nl = buffer_.find('\n');
      if (nl != std::string::npos) {
        std::string line = buffer_.substr(0, nl);
        buffer_.erase(0, nl + 1);
        return line;
      }
      const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
          deadline - std::chrono::steady_clock::now());
      if (left.count() <= 0) fail("timed out");
      pollfd pfd{read_fd_, POLLIN, 0};
      const int ready = poll(&pfd, 1, static_cast<int>(left.count()));
      if (ready < 0) {
        if (errno == EINTR) continue;
        fail("poll failed");
      }
      if (ready == 0) fail("timed out");
      char chunk[4096];
      const ssize_t r = ::read(read_fd_, chunk, sizeof(chunk));
      if (r < 0) {
        if (errno == EINTR) continue;
        fail("read failed");
      }
      if (r == 0) fail("process closed its output");
      buffer_.append(chunk, static_cast<std::size_t>(r));
    }
  }

  std::string command_;
  std::chrono::milliseconds timeout_;
  pid_t pid_ = -1;
  int write_fd_ = -1;
  int read_fd_ = -1;
  std::string buffer_;
  std::mutex mutex_;
};

}  // namespace

Oracle similarity_oracle(const MolGraph &target, std::string name) {
  auto fp = std::make_shared<const Fingerprint>(morgan_fingerprint(target));
  return Oracle(std::move(name), [fp](const MolGraph &g) {
    return tanimoto(morgan_fingerprint(g), *fp);
  });
}

Oracle isomer_oracle(const Formula &formula, double temperature) {
  if (!(temperature > 0.0)) {
    throw Error(ErrorCode::kConfigError, "isomer temperature must be positive");
  }
  return Oracle("isomer:" + format_formula(formula),
                [formula, temperature](const MolGraph &g) {
                  const Formula f = molecular_formula(g);
                  std::set<std::string> keys;
                  for (const auto &[k, v] : f) keys.insert(k);
                  for (const auto &[k, v] : formula) keys.insert(k);
                  int deviation = 0;
                  for (const std::string &k : keys) {
                    const auto a = f.find(k);
                    const auto b = formula.find(k);
                    const int ca = a == f.end() ? 0 : a->second;
                    const int cb = b == formula.end() ? 0 : b->second;
                    deviation += std::abs(ca - cb);
                  }
                  return std::exp(-static_cast<double>(deviation) / temperature);
                });
}

Oracle geometric_mpo(std::vector<std::pair<Oracle, double>> components,
                     std::string name) {
  if (components.empty()) {
    throw Error(ErrorCode::kConfigError, "MPO needs at least one component");
  }
  double total = 0.0;
  bool thread_safe = true;
  for (const auto &[oracle, weight] : components) {
    if (!(weight > 0.0)) throw Error(ErrorCode::kConfigError, "MPO weights must be positive");
    total += weight;
    thread_safe = thread_safe && oracle.thread_safe();
  }
  return Oracle(
      std::move(name),
      [components = std::move(components), total](const MolGraph &g) {
        double log_sum = 0.0;
        for (const auto &[oracle, weight] : components) {
          const double s = oracle(g);
          if (s <= 0.0) return 0.0;
          log_sum += weight * std::log(s);
        }
        return std::exp(log_sum / total);
      },
      thread_safe);
}

Oracle heavy_atom_oracle(int target, double scale) {
  return Oracle("heavy_atoms:" + std::to_string(target), [target, scale](const MolGraph &g) {
    return std::exp(-std::abs(g.atom_count() - target) / scale);
  });
}

Oracle ring_count_oracle(int target, double scale) {
  return Oracle("rings:" + std::to_string(target), [target, scale](const MolGraph &g) {
    return std::exp(-std::abs(ring_count(g) - target) / scale);
  });
}

Oracle constant_oracle(double value) {
  return Oracle("constant:" + format_number(value),
                [value](const MolGraph &) { return value; });
}

Oracle external_oracle(const std::string &command, std::chrono::milliseconds timeout) {
  auto process = std::make_shared<Subprocess>(command, timeout);
  return Oracle(
      "external:" + command,
      [process](const MolGraph &g) { return process->query(canonical_form(g).smiles); },
      false);
}

Oracle make_oracle(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::kConfigError,
                "oracle spec must look like kind:argument, got '" + std::string(spec) + "'");
  }
  const std::string_view kind = spec.substr(0, colon);
  const std::string arg(spec.substr(colon + 1));
  if (kind == "similarity" || kind == "rediscovery") {
    return similarity_oracle(parse_smiles(arg), std::string(kind) + ":" + arg);
  }
  if (kind == "isomer") return isomer_oracle(parse_formula(arg));
  if (kind == "heavy_atoms") {
    return heavy_atom_oracle(static_cast<int>(parse_number(arg, "heavy_atoms")));
  }
  if (kind == "rings") return ring_count_oracle(static_cast<int>(parse_number(arg, "rings")));
  if (kind == "constant") return constant_oracle(parse_number(arg, "constant"));
  if (kind == "external") {
    if (arg.empty()) throw Error(ErrorCode::kConfigError, "external oracle needs a command");
    return external_oracle(arg);
  }
  throw Error(ErrorCode::kConfigError, "unknown oracle kind '" + std::string(kind) + "'");
}

}  // namespace molga
