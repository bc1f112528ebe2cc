// Copyright 2026 The normkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "normkit/backend.h"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <deque>
#include <map>

#include "json.hpp"
#include "normkit/normalizer.h"
#include "normkit/parallel.h"

namespace normkit {

BackendResult RulesBackend::Predict(const std::vector<const Record *> &records) {
  BackendResult result;
  result.outputs.resize(records.size());
  result.settled.assign(records.size(), true);
  ParallelFor(records.size(), jobs_, [&](size_t i) {
    NormalizeOptions options;
    options.language = records[i]->language;
    try {
      result.outputs[i] = Normalize(records[i]->input, options).canonical;
    } catch (const Error &) {
      result.outputs[i] = std::string();
    }
  });
  return result;
}

ProcessBackend::ProcessBackend(ProcessBackendConfig config)
    : config_(std::move(config)) {
  if (config_.command.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty backend command");
  }
  if (config_.max_in_flight == 0) {
    throw Error(ErrorCode::kInvalidArgument, "max_in_flight must be >= 1");
  }
}

namespace {

class Child {
 public:
  explicit Child(const std::string &command) {
    int in[2], out[2];
    if (pipe(in) != 0 || pipe(out) != 0) {
      throw Error(ErrorCode::kBackendCrash,
                  std::string("pipe: ") + std::strerror(errno));
    }
    pid_ = fork();
    if (pid_ < 0) {
      throw Error(ErrorCode::kBackendCrash,
                  std::string("fork: ") + std::strerror(errno));
    }
    if (pid_ == 0) {
      dup2(in[0], STDIN_FILENO);
      dup2(out[1], STDOUT_FILENO);
      close(in[0]);
      close(in[1]);
      close(out[0]);
      close(out[1]);
      execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char *>(nullptr));
      _exit(127);
    }
    close(in[0]);
    close(out[1]);
    to_child_ = in[1];
    from_child_ = out[0];
    fcntl(to_child_, F_SETFL, fcntl(to_child_, F_GETFL) | O_NONBLOCK);
    fcntl(from_child_, F_SETFL, fcntl(from_child_, F_GETFL) | O_NONBLOCK);
  }

  ~Child() {
    CloseInput();
    if (from_child_ >= 0) close(from_child_);
    if (pid_ > 0) {
      // Give a well-behaved backend a moment to exit on EOF.
      for (int i = 0; i < 20; ++i) {
        if (waitpid(pid_, nullptr, WNOHANG) == pid_) return;
        usleep(5000);
      }
      kill(pid_, SIGKILL);
      waitpid(pid_, nullptr, 0);
    }
  }

  void CloseInput() {
    if (to_child_ >= 0) close(to_child_);
    to_child_ = -1;
  }

  int to_child() const { return to_child_; }
  int from_child() const { return from_child_; }

 private:
  pid_t pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
};

using Clock = std::chrono::steady_clock;

}  // namespace

BackendResult ProcessBackend::Predict(const std::vector<const Record *> &records) {
  BackendResult result;
  result.outputs.resize(records.size());
  result.settled.assign(records.size(), false);
  if (records.empty()) return result;
  signal(SIGPIPE, SIG_IGN);
  Child child(config_.command);

  size_t next = 0;      // next request to queue
  size_t settled = 0;
  std::string write_buf;
  std::string read_buf;
  std::map<size_t, Clock::time_point> in_flight;
  auto fail = [&](ErrorCode code, std::string message) {
    result.failure = code;
    result.failure_message = std::move(message);
  };

  while (settled < records.size() && !result.failure) {
    while (next < records.size() && in_flight.size() < config_.max_in_flight) {
      nlohmann::ordered_json req = {{"id", next},
                                    {"input", records[next]->input}};
      write_buf += req.dump() + "\n";
      in_flight[next] = Clock::now();
      ++next;
    }
    if (next == records.size() && write_buf.empty()) child.CloseInput();

    auto now = Clock::now();
    auto wait = config_.timeout;
    for (const auto &[id, sent] : in_flight) {
      auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
          sent + config_.timeout - now);
      wait = std::min(wait, std::max(left, std::chrono::milliseconds(0)));
    }
    pollfd fds[2] = {{child.from_child(), POLLIN, 0},
                     {child.to_child(), POLLOUT, 0}};
    nfds_t nfds = (!write_buf.empty() && child.to_child() >= 0) ? 2 : 1;
    int rc = poll(fds, nfds, static_cast<int>(wait.count()));
    if (rc < 0 && errno != EINTR) {
      fail(ErrorCode::kBackendCrash, std::string("poll: ") + std::strerror(errno));
      break;
    }

    if (nfds == 2 && (fds[1].revents & (POLLOUT | POLLERR | POLLHUP))) {
      ssize_t w = write(child.to_child(), write_buf.data(), write_buf.size());
      if (w > 0) {
        write_buf.erase(0, static_cast<size_t>(w));
      } else if (w < 0 && errno != EAGAIN && errno != EINTR) {
        fail(ErrorCode::kBackendCrash, "backend closed its input");
        break;
      }
    }

    if (fds[0].revents & (POLLIN | POLLHUP | POLLERR)) {
      char buf[65536];
      ssize_t r = read(child.from_child(), buf, sizeof(buf));
      if (r == 0) {
        fail(ErrorCode::kBackendCrash,
             "backend exited with " +
                 std::to_string(records.size() - settled) +
                 " requests unanswered");
        break;
      }
      if (r > 0) read_buf.append(buf, static_cast<size_t>(r));
      size_t nl;
      while (!result.failure && (nl = read_buf.find('\n')) != std::string::npos) {
        std::string line = read_buf.substr(0, nl);
        read_buf.erase(0, nl + 1);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto j = nlohmann::json::parse(line, nullptr, false);
        // {"id", "error"} answers a request the server could not handle;
        // it settles the id with no prediction.
        bool has_output = j.is_object() && j.contains("output") &&
                          j["output"].is_string();
        bool has_error = j.is_object() && j.contains("error") &&
                         j["error"].is_string();
        if (j.is_discarded() || !j.is_object() || !j.contains("id") ||
            !j["id"].is_number_integer() || has_output == has_error) {
          fail(ErrorCode::kProtocolViolation,
               "malformed response line: " + line.substr(0, 200));
          break;
        }
        int64_t id = j["id"].get<int64_t>();
        if (id < 0 || static_cast<size_t>(id) >= records.size()) {
          fail(ErrorCode::kProtocolViolation,
               "response for unknown id " + std::to_string(id));
          break;
        }
        auto it = in_flight.find(static_cast<size_t>(id));
        if (it == in_flight.end()) {
          if (result.settled[id]) continue;  // late answer after a timeout
          fail(ErrorCode::kProtocolViolation,
               "response for id " + std::to_string(id) + " never requested");
          break;
        }
        in_flight.erase(it);
        if (has_output) result.outputs[id] = j["output"].get<std::string>();
        result.settled[id] = true;
        ++settled;
      }
    }

    now = Clock::now();
    for (auto it = in_flight.begin(); it != in_flight.end();) {
      if (now - it->second >= config_.timeout) {
        result.settled[it->first] = true;
        ++result.timeouts;
        ++settled;
        it = in_flight.erase(it);
      } else {
        ++it;
      }
    }
  }
  return result;
}

}  // namespace normkit
