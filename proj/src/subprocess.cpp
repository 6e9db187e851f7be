#include "mignotte/subprocess.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstring>

#include "mignotte/error.hpp"

namespace mignotte {

namespace {

void set_nonblocking(int fd) {
  int flags = fcntl(fd, F_GETFL, 0);
  fcntl(fd, F_SETFL, flags | O_NONBLOCK);
}

} // namespace

ProcessResult run_process(const std::string& command,
                          const std::string& stdin_data,
                          double timeout_seconds) {
  int in_pipe[2], out_pipe[2], err_pipe[2];
  if (pipe(in_pipe) != 0 || pipe(out_pipe) != 0 || pipe(err_pipe) != 0)
    throw Error(errc::io_error, std::string("pipe: ") + std::strerror(errno));

  pid_t pid = fork();
  if (pid < 0)
    throw Error(errc::io_error, std::string("fork: ") + std::strerror(errno));

  if (pid == 0) {
    // Child: own process group so a timeout kill reaps grandchildren too.
    setpgid(0, 0);
    dup2(in_pipe[0], STDIN_FILENO);
    dup2(out_pipe[1], STDOUT_FILENO);
    dup2(err_pipe[1], STDERR_FILENO);
    for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1],
                   err_pipe[0], err_pipe[1]})
      close(fd);
    execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }

  close(in_pipe[0]);
  close(out_pipe[1]);
  close(err_pipe[1]);
  set_nonblocking(in_pipe[1]);
  set_nonblocking(out_pipe[0]);
  set_nonblocking(err_pipe[0]);

  ProcessResult result;
  std::size_t written = 0;
  bool stdin_open = true;
  bool stdout_open = true;
  bool stderr_open = true;

  // Ignore EPIPE from solvers that exit without draining stdin.
  signal(SIGPIPE, SIG_IGN);

  auto deadline = std::chrono::steady_clock::now() +
                  std::chrono::duration<double>(timeout_seconds);

  while (stdout_open || stderr_open || stdin_open) {
    if (stdin_open && written == stdin_data.size()) {
      close(in_pipe[1]);
      stdin_open = false;
    }

    struct pollfd fds[3];
    int nfds = 0;
    int idx_in = -1, idx_out = -1, idx_err = -1;
    if (stdin_open) {
      idx_in = nfds;
      fds[nfds++] = {in_pipe[1], POLLOUT, 0};
    }
    if (stdout_open) {
      idx_out = nfds;
      fds[nfds++] = {out_pipe[0], POLLIN, 0};
    }
    if (stderr_open) {
      idx_err = nfds;
      fds[nfds++] = {err_pipe[0], POLLIN, 0};
    }
    if (nfds == 0) break;

    auto remaining = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - std::chrono::steady_clock::now());
    if (remaining.count() <= 0) {
      result.timed_out = true;
      break;
    }
    int wait_ms = remaining.count() > 3600000
                      ? 3600000
                      : static_cast<int>(remaining.count()) + 1;
    int rc = poll(fds, nfds, wait_ms);
    if (rc < 0) {
      if (errno == EINTR) continue;
      break;
    }
    if (rc == 0) {
      result.timed_out = true;
      break;
    }

    char buf[4096];
    if (idx_in >= 0 && (fds[idx_in].revents & (POLLOUT | POLLERR | POLLHUP))) {
      if (fds[idx_in].revents & (POLLERR | POLLHUP)) {
        close(in_pipe[1]);
        stdin_open = false;
      } else {
        ssize_t w = write(in_pipe[1], stdin_data.data() + written,
                          stdin_data.size() - written);
        if (w > 0) {
          written += static_cast<std::size_t>(w);
        } else if (w < 0 && errno != EAGAIN && errno != EINTR) {
          close(in_pipe[1]);
          stdin_open = false;
        }
      }
    }
    if (idx_out >= 0 && (fds[idx_out].revents & (POLLIN | POLLHUP))) {
      ssize_t r = read(out_pipe[0], buf, sizeof buf);
      if (r > 0) {
        result.out.append(buf, static_cast<std::size_t>(r));
      } else if (r == 0 || (r < 0 && errno != EAGAIN && errno != EINTR)) {
        close(out_pipe[0]);
        stdout_open = false;
      }
    }
    if (idx_err >= 0 && (fds[idx_err].revents & (POLLIN | POLLHUP))) {
      ssize_t r = read(err_pipe[0], buf, sizeof buf);
      if (r > 0) {
        result.err.append(buf, static_cast<std::size_t>(r));
      } else if (r == 0 || (r < 0 && errno != EAGAIN && errno != EINTR)) {
        close(err_pipe[0]);
        stderr_open = false;
      }
    }
  }

  if (stdin_open) close(in_pipe[1]);
  if (stdout_open) close(out_pipe[0]);
  if (stderr_open) close(err_pipe[0]);

  if (result.timed_out) {
    kill(-pid, SIGKILL);
    kill(pid, SIGKILL);
  }

  int status = 0;
  waitpid(pid, &status, 0);
  if (WIFEXITED(status))
    result.exit_code = WEXITSTATUS(status);
  else if (WIFSIGNALED(status))
    result.exit_code = 128 + WTERMSIG(status);
  return result;
}

} // namespace mignotte
