#include <doctest.h>

#include <doekit/errors.hpp>
#include <doekit/ingest.hpp>

#include <filesystem>

#include <nlohmann/json.hpp>

#include "fixture_repo.hpp"

using namespace doekit;
using namespace testsupport;

TEST_CASE("count_file_loc counts newline-delimited lines") {
  CHECK(count_file_loc("") == 0);
  CHECK(count_file_loc("a\n") == 1);
  CHECK(count_file_loc("a") == 1);
  CHECK(count_file_loc("a\nb\n") == 2);
  CHECK(count_file_loc("a\nb") == 2);
}

TEST_CASE("NUL bytes mark a blob as binary") {
  CHECK(is_binary_blob(std::string("ab\0cd", 5)));
  CHECK_FALSE(is_binary_blob("plain text\n"));
  CHECK_THROWS_AS(count_file_loc(std::string("\0", 1)), Error);
}

TEST_CASE("extension filter is case-insensitive and requires a listed extension") {
  auto exts = IngestConfig::default_extension_allowlist();
  CHECK(passes_extension_filter("src/a.py", exts));
  CHECK(passes_extension_filter("src/A.PY", exts));
  CHECK(passes_extension_filter("tools/build.sh", exts));
  CHECK_FALSE(passes_extension_filter("README.md", exts));
  CHECK_FALSE(passes_extension_filter("Makefile", exts));
  CHECK_FALSE(passes_extension_filter("archive.tar.gz", exts));
}

TEST_CASE("ingest rejects non-repositories and empty histories") {
  auto dir = make_temp_dir("notrepo");
  try {
    ingest_repository(dir.string());
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotARepository);
  }

  auto empty = make_temp_dir("emptyrepo");
  init_repo(empty / "r");
  try {
    ingest_repository((empty / "r").string());
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EmptyHistory);
  }
}

TEST_CASE("trio repository produces the hand-derived ledger") {
  auto parent = make_temp_dir("trio");
  auto repo = build_trio_repo(parent);
  auto ledger = ingest_repository(repo.string());

  CHECK(ledger.reference_ts == 1618045200); // 2021-04-10T09:00:00Z

  REQUIRE(ledger.file_loc.size() == 5);
  CHECK(ledger.file_loc.at("src/core.py") == 47);
  CHECK(ledger.file_loc.at("src/io.py") == 26);
  CHECK(ledger.file_loc.at("src/net.py") == 30);
  CHECK(ledger.file_loc.at("src/ui.py") == 20);
  CHECK(ledger.file_loc.at("tools/build.sh") == 10);

  REQUIRE(ledger.pairs.size() == 9);

  const auto& alice_core = ledger.pairs.at({"alice@example.com", "src/core.py"});
  CHECK(alice_core.total_adds == 30.0);
  CHECK(alice_core.is_first_author);
  CHECK(alice_core.last_commit_ts == 1610272800);
  REQUIRE(alice_core.per_commit_adds.size() == 1);
  CHECK(alice_core.per_commit_adds[0].adds == 30.0);

  const auto& bob_core = ledger.pairs.at({"bob@example.com", "src/core.py"});
  CHECK(bob_core.total_adds == 12.0);
  CHECK_FALSE(bob_core.is_first_author);
  CHECK(bob_core.last_commit_ts == 1612972800);

  const auto& carol_core = ledger.pairs.at({"carol@example.com", "src/core.py"});
  CHECK(carol_core.total_adds == 5.0);
  CHECK_FALSE(carol_core.is_first_author);
  CHECK(carol_core.last_commit_ts == 1618045200);

  const auto& alice_io = ledger.pairs.at({"alice@example.com", "src/io.py"});
  CHECK(alice_io.total_adds == 18.0);
  CHECK(alice_io.is_first_author);

  const auto& carol_io = ledger.pairs.at({"carol@example.com", "src/io.py"});
  CHECK(carol_io.total_adds == 8.0);
  CHECK_FALSE(carol_io.is_first_author);

  const auto& bob_net = ledger.pairs.at({"bob@example.com", "src/net.py"});
  CHECK(bob_net.total_adds == 24.0);
  CHECK(bob_net.is_first_author);

  const auto& alice_net = ledger.pairs.at({"alice@example.com", "src/net.py"});
  CHECK(alice_net.total_adds == 6.0);
  CHECK_FALSE(alice_net.is_first_author);
  CHECK(alice_net.last_commit_ts == 1616234400);

  const auto& carol_ui = ledger.pairs.at({"carol@example.com", "src/ui.py"});
  CHECK(carol_ui.total_adds == 20.0);
  CHECK(carol_ui.is_first_author);

  const auto& bob_build = ledger.pairs.at({"bob@example.com", "tools/build.sh"});
  CHECK(bob_build.total_adds == 10.0);
  CHECK(bob_build.is_first_author);

  REQUIRE(ledger.authors.size() == 3);
  CHECK(ledger.authors.at("alice@example.com").display_name == "Alice Example");
}

TEST_CASE("ingest is deterministic across runs") {
  auto parent = make_temp_dir("det");
  auto repo = build_trio_repo(parent);
  auto a = ingest_repository(repo.string());
  auto b = ingest_repository(repo.string());
  CHECK(ledger_to_csv(a) == ledger_to_csv(b));
  CHECK(ledger_to_json(a) == ledger_to_json(b));
}

TEST_CASE("extension filter drops files from the ledger") {
  auto parent = make_temp_dir("ext");
  auto repo = build_trio_repo(parent);
  IngestConfig config;
  config.extensions = {"py"};
  auto ledger = ingest_repository(repo.string(), config);
  CHECK(ledger.file_loc.count("tools/build.sh") == 0);
  CHECK(ledger.file_loc.size() == 4);
  CHECK(ledger.pairs.count({"bob@example.com", "tools/build.sh"}) == 0);
}

TEST_CASE("single developer repository") {
  auto parent = make_temp_dir("solo");
  auto repo = build_single_dev_repo(parent);
  auto ledger = ingest_repository(repo.string());

  CHECK(ledger.reference_ts == 1620043200); // 2021-05-03T12:00:00Z
  REQUIRE(ledger.pairs.size() == 2);

  const auto& lib = ledger.pairs.at({"dana@example.com", "lib.py"});
  CHECK(lib.total_adds == 19.0);
  CHECK(lib.is_first_author);
  REQUIRE(lib.per_commit_adds.size() == 2);
  CHECK(lib.per_commit_adds[0].adds == 15.0);
  CHECK(lib.per_commit_adds[1].adds == 4.0);

  const auto& app = ledger.pairs.at({"dana@example.com", "app.py"});
  CHECK(app.total_adds == 9.0);
  CHECK(app.is_first_author);
}

TEST_CASE("merge commits credit the first-parent diff to the merger") {
  auto parent = make_temp_dir("weave");
  auto repo = build_merge_repo(parent);
  auto ledger = ingest_repository(repo.string());

  CHECK(ledger.reference_ts == 1622887200); // merge, 2021-06-05T10:00:00Z
  REQUIRE(ledger.pairs.size() == 5);

  // erin wrote alpha.c and also absorbs the branch's alpha lines at merge.
  const auto& erin_alpha = ledger.pairs.at({"erin@example.com", "alpha.c"});
  CHECK(erin_alpha.total_adds == 13.0);
  CHECK(erin_alpha.is_first_author);
  CHECK(erin_alpha.last_commit_ts == 1622887200);
  REQUIRE(erin_alpha.per_commit_adds.size() == 2);
  CHECK(erin_alpha.per_commit_adds[0].adds == 10.0);
  CHECK(erin_alpha.per_commit_adds[1].adds == 3.0);

  // frank's own branch commits stay credited to him.
  const auto& frank_alpha = ledger.pairs.at({"frank@example.com", "alpha.c"});
  CHECK(frank_alpha.total_adds == 3.0);
  CHECK_FALSE(frank_alpha.is_first_author);

  // the merge re-credits beta's lines to erin, but frank keeps creatorship.
  const auto& frank_beta = ledger.pairs.at({"frank@example.com", "beta.c"});
  CHECK(frank_beta.total_adds == 8.0);
  CHECK(frank_beta.is_first_author);

  const auto& erin_beta = ledger.pairs.at({"erin@example.com", "beta.c"});
  CHECK(erin_beta.total_adds == 8.0);
  CHECK_FALSE(erin_beta.is_first_author);

  const auto& erin_gamma = ledger.pairs.at({"erin@example.com", "gamma.c"});
  CHECK(erin_gamma.total_adds == 6.0);
  CHECK(erin_gamma.is_first_author);

  CHECK(ledger.file_loc.at("alpha.c") == 13);
  CHECK(ledger.file_loc.at("beta.c") == 8);
  CHECK(ledger.file_loc.at("gamma.c") == 6);
}

TEST_CASE("a rename is a delete plus a create by default") {
  auto parent = make_temp_dir("shift");
  auto repo = build_rename_repo(parent);
  auto ledger = ingest_repository(repo.string());

  REQUIRE(ledger.pairs.size() == 1);
  const auto& pair = ledger.pairs.at({"erin@example.com", "new_name.py"});
  CHECK(pair.total_adds == 16.0);
  CHECK(pair.is_first_author);
  CHECK(pair.last_commit_ts == 1625306400); // the rename commit
  CHECK(ledger.file_loc.at("new_name.py") == 16);
  CHECK(ledger.pairs.count({"frank@example.com", "new_name.py"}) == 0);
}

TEST_CASE("follow-renames carries history across the rename") {
  auto parent = make_temp_dir("shiftf");
  auto repo = build_rename_repo(parent);
  IngestConfig config;
  config.follow_renames = true;
  auto ledger = ingest_repository(repo.string(), config);

  REQUIRE(ledger.pairs.size() == 2);

  const auto& erin = ledger.pairs.at({"erin@example.com", "new_name.py"});
  CHECK(erin.total_adds == 12.0);
  CHECK(erin.is_first_author);
  CHECK(erin.last_commit_ts == 1625306400); // renaming touches the pair
  REQUIRE(erin.per_commit_adds.size() == 1);
  CHECK(erin.per_commit_adds[0].adds == 12.0);

  const auto& frank = ledger.pairs.at({"frank@example.com", "new_name.py"});
  CHECK(frank.total_adds == 4.0);
  CHECK_FALSE(frank.is_first_author);
  CHECK(frank.last_commit_ts == 1625220000); // untouched by the rename

  CHECK(ledger.pairs.count({"erin@example.com", "old_name.py"}) == 0);
}
