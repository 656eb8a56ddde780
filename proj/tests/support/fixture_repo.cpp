#include "fixture_repo.hpp"

#include <doekit/errors.hpp>
#include <doekit/subprocess.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace testsupport {

namespace fs = std::filesystem;

void git(const fs::path& repo, const std::vector<std::string>& args) {
  std::vector<std::string> argv{"git"};
  argv.insert(argv.end(), args.begin(), args.end());
  doekit::RunOptions opts;
  opts.cwd = repo.string();
  opts.extra_env["GIT_CONFIG_GLOBAL"] = "/dev/null";
  opts.extra_env["GIT_CONFIG_SYSTEM"] = "/dev/null";
  auto res = doekit::run_process(argv, opts);
  if (!res.ok()) {
    std::ostringstream msg;
    msg << "git";
    for (const auto& a : args) msg << ' ' << a;
    msg << " failed (" << res.exit_code << "): " << res.err;
    throw std::runtime_error(msg.str());
  }
}

void init_repo(const fs::path& repo) {
  fs::create_directories(repo);
  git(repo, {"init", "-q", "-b", "main"});
}

void write_file(const fs::path& repo, const std::string& rel,
                const std::string& content) {
  fs::path target = repo / rel;
  fs::create_directories(target.parent_path());
  std::ofstream out(target, std::ios::binary | std::ios::trunc);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + target.string());
}

void append_file(const fs::path& repo, const std::string& rel,
                 const std::string& content) {
  fs::path target = repo / rel;
  std::ofstream out(target, std::ios::binary | std::ios::app);
  out << content;
  if (!out) throw std::runtime_error("append failed: " + target.string());
}

void commit_all(const fs::path& repo, const Author& author,
                const std::string& date, const std::string& message) {
  git(repo, {"add", "-A"});
  doekit::RunOptions opts;
  opts.cwd = repo.string();
  opts.extra_env["GIT_CONFIG_GLOBAL"] = "/dev/null";
  opts.extra_env["GIT_CONFIG_SYSTEM"] = "/dev/null";
  opts.extra_env["GIT_AUTHOR_NAME"] = author.name;
  opts.extra_env["GIT_AUTHOR_EMAIL"] = author.email;
  opts.extra_env["GIT_AUTHOR_DATE"] = date;
  opts.extra_env["GIT_COMMITTER_NAME"] = author.name;
  opts.extra_env["GIT_COMMITTER_EMAIL"] = author.email;
  opts.extra_env["GIT_COMMITTER_DATE"] = date;
  auto res = doekit::run_process({"git", "commit", "-q", "-m", message}, opts);
  if (!res.ok()) {
    throw std::runtime_error("git commit failed: " + res.err);
  }
}

fs::path make_temp_dir(const std::string& hint) {
  static std::atomic<unsigned> counter{0};
  fs::path base = fs::temp_directory_path();
  std::string tmpl =
      (base / ("doekit_" + hint + "_" + std::to_string(counter++) + "_XXXXXX"))
          .string();
  std::vector<char> buf(tmpl.begin(), tmpl.end());
  buf.push_back('\0');
  if (!mkdtemp(buf.data())) {
    throw std::runtime_error("mkdtemp failed for " + tmpl);
  }
  return fs::path(buf.data());
}

std::string code_lines(const std::string& tag, int start, int count) {
  std::ostringstream out;
  for (int i = 0; i < count; ++i) {
    out << tag << "_" << (start + i) << " = " << (start + i) << "\n";
  }
  return out.str();
}

fs::path build_trio_repo(const fs::path& parent) {
  fs::path repo = parent / "trio";
  init_repo(repo);

  write_file(repo, "src/core.py", code_lines("core", 1, 30));
  commit_all(repo, kAlice, "2021-01-10T10:00:00 +0000", "add core");

  write_file(repo, "src/io.py", code_lines("io", 1, 18));
  commit_all(repo, kAlice, "2021-01-15T11:00:00 +0000", "add io");

  write_file(repo, "src/net.py", code_lines("net", 1, 24));
  commit_all(repo, kBob, "2021-02-01T09:30:00 +0000", "add net");

  append_file(repo, "src/core.py", code_lines("core", 31, 12));
  commit_all(repo, kBob, "2021-02-10T16:00:00 +0000", "extend core");

  write_file(repo, "src/ui.py", code_lines("ui", 1, 20));
  commit_all(repo, kCarol, "2021-03-01T10:00:00 +0000", "add ui");

  append_file(repo, "src/io.py", code_lines("io", 19, 8));
  commit_all(repo, kCarol, "2021-03-05T14:00:00 +0000", "extend io");

  append_file(repo, "src/net.py", code_lines("net", 25, 6));
  commit_all(repo, kAlice, "2021-03-20T10:00:00 +0000", "extend net");

  write_file(repo, "tools/build.sh", code_lines("build", 1, 10));
  commit_all(repo, kBob, "2021-04-02T08:00:00 +0000", "add build script");

  append_file(repo, "src/core.py", code_lines("core", 43, 5));
  commit_all(repo, kCarol, "2021-04-10T09:00:00 +0000", "touch core");

  return repo;
}

fs::path build_single_dev_repo(const fs::path& parent) {
  fs::path repo = parent / "solo";
  init_repo(repo);

  write_file(repo, "lib.py", code_lines("lib", 1, 15));
  commit_all(repo, kDana, "2021-05-01T10:00:00 +0000", "add lib");

  write_file(repo, "app.py", code_lines("app", 1, 9));
  append_file(repo, "lib.py", code_lines("lib", 16, 4));
  commit_all(repo, kDana, "2021-05-03T12:00:00 +0000", "add app, extend lib");

  return repo;
}

fs::path build_merge_repo(const fs::path& parent) {
  fs::path repo = parent / "weave";
  init_repo(repo);

  write_file(repo, "alpha.c", code_lines("alpha", 1, 10));
  commit_all(repo, kErin, "2021-06-01T10:00:00 +0000", "add alpha");

  git(repo, {"checkout", "-q", "-b", "feature"});
  write_file(repo, "beta.c", code_lines("beta", 1, 8));
  commit_all(repo, kFrank, "2021-06-02T10:00:00 +0000", "add beta");
  append_file(repo, "alpha.c", code_lines("alpha", 11, 3));
  commit_all(repo, kFrank, "2021-06-03T10:00:00 +0000", "extend alpha");

  git(repo, {"checkout", "-q", "main"});
  write_file(repo, "gamma.c", code_lines("gamma", 1, 6));
  commit_all(repo, kErin, "2021-06-04T10:00:00 +0000", "add gamma");

  doekit::RunOptions opts;
  opts.cwd = repo.string();
  opts.extra_env["GIT_CONFIG_GLOBAL"] = "/dev/null";
  opts.extra_env["GIT_CONFIG_SYSTEM"] = "/dev/null";
  opts.extra_env["GIT_AUTHOR_NAME"] = kErin.name;
  opts.extra_env["GIT_AUTHOR_EMAIL"] = kErin.email;
  opts.extra_env["GIT_AUTHOR_DATE"] = "2021-06-05T10:00:00 +0000";
  opts.extra_env["GIT_COMMITTER_NAME"] = kErin.name;
  opts.extra_env["GIT_COMMITTER_EMAIL"] = kErin.email;
  opts.extra_env["GIT_COMMITTER_DATE"] = "2021-06-05T10:00:00 +0000";
  auto res = doekit::run_process(
      {"git", "merge", "-q", "--no-ff", "-m", "merge feature", "feature"},
      opts);
  if (!res.ok()) {
    throw std::runtime_error("git merge failed: " + res.err);
  }

  return repo;
}

fs::path build_rename_repo(const fs::path& parent) {
  fs::path repo = parent / "shift";
  init_repo(repo);

  write_file(repo, "old_name.py", code_lines("mod", 1, 12));
  commit_all(repo, kErin, "2021-07-01T10:00:00 +0000", "add module");

  append_file(repo, "old_name.py", code_lines("mod", 13, 4));
  commit_all(repo, kFrank, "2021-07-02T10:00:00 +0000", "extend module");

  git(repo, {"mv", "old_name.py", "new_name.py"});
  commit_all(repo, kErin, "2021-07-03T10:00:00 +0000", "rename module");

  return repo;
}

} // namespace testsupport
