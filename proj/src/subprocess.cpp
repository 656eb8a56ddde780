#include "doekit/subprocess.hpp"

#include <cerrno>
#include <cstring>

#include <fcntl.h>
#include <poll.h>
#include <sys/wait.h>
#include <unistd.h>

#include "doekit/errors.hpp"

namespace doekit {

namespace {

[[noreturn]] void child_exec(const std::vector<std::string>& argv,
                             const RunOptions& options, int out_fd,
                             int err_fd) {
  if (options.cwd && chdir(options.cwd->c_str()) != 0) _exit(127);
  if (options.stdin_file) {
    int in_fd = open(options.stdin_file->c_str(), O_RDONLY);
    if (in_fd < 0) _exit(127);
    dup2(in_fd, STDIN_FILENO);
    close(in_fd);
  } else {
    int devnull = open("/dev/null", O_RDONLY);
    if (devnull >= 0) {
      dup2(devnull, STDIN_FILENO);
      close(devnull);
    }
  }
  dup2(out_fd, STDOUT_FILENO);
  dup2(err_fd, STDERR_FILENO);
  close(out_fd);
  close(err_fd);

  for (const auto& [key, value] : options.extra_env)
    setenv(key.c_str(), value.c_str(), 1);

  std::vector<char*> cargv;
  cargv.reserve(argv.size() + 1);
  for (const auto& arg : argv) cargv.push_back(const_cast<char*>(arg.c_str()));
  cargv.push_back(nullptr);
  execvp(cargv[0], cargv.data());
  _exit(127);
}

} // namespace

RunResult run_process(const std::vector<std::string>& argv,
                      const RunOptions& options) {
  if (argv.empty()) throw Error(Errc::IoError, "empty argv");

  int out_pipe[2];
  int err_pipe[2];
  if (pipe(out_pipe) != 0 || pipe(err_pipe) != 0)
    throw Error(Errc::IoError, std::string("pipe: ") + std::strerror(errno));

  pid_t pid = fork();
  if (pid < 0)
    throw Error(Errc::IoError, std::string("fork: ") + std::strerror(errno));

  if (pid == 0) {
    close(out_pipe[0]);
    close(err_pipe[0]);
    child_exec(argv, options, out_pipe[1], err_pipe[1]);
  }

  close(out_pipe[1]);
  close(err_pipe[1]);

  RunResult result;
  struct Stream {
    int fd;
    std::string* sink;
    bool open;
  };
  Stream streams[2] = {{out_pipe[0], &result.out, true},
                       {err_pipe[0], &result.err, true}};

  char buf[65536];
  while (streams[0].open || streams[1].open) {
    pollfd fds[2];
    nfds_t nfds = 0;
    for (auto& s : streams) {
      if (!s.open) continue;
      fds[nfds].fd = s.fd;
      fds[nfds].events = POLLIN;
      ++nfds;
    }
    if (poll(fds, nfds, -1) < 0) {
      if (errno == EINTR) continue;
      break;
    }
    for (nfds_t i = 0; i < nfds; ++i) {
      if (!(fds[i].revents & (POLLIN | POLLHUP | POLLERR))) continue;
      for (auto& s : streams) {
        if (!s.open || s.fd != fds[i].fd) continue;
        ssize_t n = read(s.fd, buf, sizeof(buf));
        if (n > 0) {
          s.sink->append(buf, static_cast<size_t>(n));
        } else if (n == 0 || (n < 0 && errno != EINTR)) {
          close(s.fd);
          s.open = false;
        }
      }
    }
  }

  int status = 0;
  while (waitpid(pid, &status, 0) < 0 && errno == EINTR) {}
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  else result.exit_code = 128 + (WIFSIGNALED(status) ? WTERMSIG(status) : 0);
  return result;
}

} // namespace doekit
