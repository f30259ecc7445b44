#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "galmod/cli.hpp"

using namespace galmod;
using nlohmann::json;

TEST_CASE("stickelberger command reports basis and index") {
    CommandResult res = run_command({"stickelberger", "--group", "3"});
    CHECK(res.status == "ok");
    CHECK(res.command == "stickelberger");
    CHECK(exit_code_for(res) == 0);
    CHECK(res.outputs["order"] == 3);
    CHECK(res.outputs["index"] == 3);
    CHECK(res.outputs["factors"] == json::array({3}));
    CHECK(res.outputs["basis"] == json({{1, 0, 0}, {0, 1, 1}, {0, 0, 3}}));
    // moduli are canonicalized
    CommandResult res2 = run_command({"stickelberger", "--group", "2,3"});
    CHECK(res2.outputs["factors"] == json::array({6}));
    CHECK(res2.outputs["order"] == 6);
}

TEST_CASE("swan command emits a full certificate") {
    CommandResult res =
        run_command({"swan", "--group", "2", "--subgroup", "1", "--r", "3"});
    REQUIRE(res.status == "ok");
    CHECK(res.outputs["index"] == 3);
    CHECK(res.outputs["subgroup_order"] == 2);
    CHECK(res.outputs["r"] == 3);
    CHECK(res.outputs["local_pass"] == true);
    CHECK(res.outputs["phi_pass"] == true);
    CHECK(res.outputs["psi_invariant"] == true);
    CHECK(res.outputs["pass"] == true);
    REQUIRE(res.outputs["per_prime"].size() == 1);
    CHECK(res.outputs["per_prime"][0]["p"] == 3);
    CHECK(res.outputs["per_prime"][0]["N"] == 2);
    CHECK(res.outputs["per_prime"][0]["pass"] == true);
    // empty subgroup option means the trivial subgroup
    CommandResult unit = run_command({"swan", "--group", "4", "--r", "5"});
    CHECK(unit.status == "ok");
    CHECK(unit.outputs["index"] == 1);
    CHECK(unit.outputs["per_prime"].empty());
    // rank-two subgroup spelled with a semicolon
    CommandResult two = run_command(
        {"swan", "--group", "2,4", "--subgroup", "1,0;0,2", "--r", "3"});
    CHECK(two.status == "ok");
    CHECK(two.outputs["subgroup_order"] == 4);
    CHECK(two.outputs["pass"] == true);
    // non-coprime r is a domain failure, not a usage failure
    CommandResult bad =
        run_command({"swan", "--group", "2", "--subgroup", "1", "--r", "2"});
    CHECK(bad.status == "domain_error");
    CHECK(exit_code_for(bad) == 3);
    CHECK(bad.outputs.is_null());
    CHECK(!bad.message.empty());
}

TEST_CASE("search command lists primes and optional witnesses") {
    CommandResult res = run_command({"search", "--m", "4", "--bound", "100"});
    REQUIRE(res.status == "ok");
    CHECK(res.outputs["primes"] == json::array({7, 23, 31, 47, 71, 79}));
    CommandResult wit =
        run_command({"search", "--m", "4", "--bound", "100", "--field", "-1"});
    REQUIRE(wit.status == "ok");
    REQUIRE(wit.outputs["primes"].size() == 6);
    CHECK(wit.outputs["primes"][0]["p"] == 7);
    CHECK(wit.outputs["primes"][0]["has_order_four"] == true);
    // conductor mismatch
    CommandResult bad =
        run_command({"search", "--m", "4", "--bound", "100", "--field", "-5"});
    CHECK(bad.status == "domain_error");
    // undersized bound
    CHECK(run_command({"search", "--m", "4", "--bound", "2"}).status ==
          "domain_error");
    // oversized bound exhausts the sieve allowance
    CommandResult big = run_command({"search", "--m", "4", "--bound", "2000000"});
    CHECK(big.status == "resource_error");
    CHECK(exit_code_for(big) == 4);
}

TEST_CASE("vp command reports the residue quotient") {
    CommandResult res = run_command({"vp", "--field", "-1", "--p", "7"});
    REQUIRE(res.status == "ok");
    CHECK(res.outputs["splitting"] == "inert");
    CHECK(res.outputs["full_order"] == 48);
    CHECK(res.outputs["unit_image_order"] == 4);
    CHECK(res.outputs["vp_order"] == 12);
    CHECK(res.outputs["vp_factors"] == json::array({12}));
    CHECK(res.outputs["has_order_four"] == true);
    CHECK(run_command({"vp", "--field", "0", "--p", "7"}).status == "domain_error");
}

TEST_CASE("chevalley command computes the exact rational") {
    CommandResult res = run_command(
        {"chevalley", "--r", "2", "--e", "3,3", "--degree", "6"});
    REQUIRE(res.status == "ok");
    CHECK(res.outputs["value"]["num"] == 6);
    CHECK(res.outputs["value"]["den"] == 1);
    CHECK(res.outputs["value"]["str"] == "6");
    CHECK(res.outputs["integral"] == true);
    CommandResult frac = run_command(
        {"chevalley", "--h", "2", "--r", "1", "--norm-index", "2", "--degree", "3"});
    CHECK(frac.outputs["value"]["str"] == "2/3");
    CHECK(frac.outputs["integral"] == false);
}

TEST_CASE("kobayashi command reports symbol and candidate orders") {
    CommandResult res = run_command({"kobayashi", "--field", "-5", "--p", "3"});
    REQUIRE(res.status == "ok");
    CHECK(res.outputs["symbol"] == 1);
    CHECK(res.outputs["cyclic_orders"] == json::array({1, 2}));
    CHECK(run_command({"kobayashi", "--field", "-1", "--p", "3"}).status ==
          "domain_error");
}

TEST_CASE("psi command tallies actions and chain failures") {
    CommandResult res = run_command({"psi", "--group", "8", "--n", "5"});
    REQUIRE(res.status == "ok");
    CHECK(res.outputs["action_count"] == 4);
    CHECK(res.outputs["chain_failures"] == 2);
    REQUIRE(res.outputs["listed"].size() == 4);
    for (const auto& entry : res.outputs["listed"]) {
        CHECK(entry["sd_kernel_size"] == 2);
        CHECK(entry.contains("chain_ok"));
    }
    // even modulus: no chain data
    CommandResult even = run_command({"psi", "--group", "3", "--n", "4"});
    REQUIRE(even.status == "ok");
    CHECK(!even.outputs.contains("chain_failures"));
    for (const auto& entry : even.outputs["listed"])
        CHECK(!entry.contains("chain_ok"));
    // noncyclic unit group
    CHECK(run_command({"psi", "--group", "3", "--n", "8"}).status == "domain_error");
}

TEST_CASE("verify-all rejects oversized bounds before running") {
    CommandResult res = run_command({"verify-all", "--size-bound", "65"});
    CHECK(res.status == "resource_error");
    CHECK(exit_code_for(res) == 4);
}

TEST_CASE("usage problems surface as usage_error, help as help_requested") {
    CHECK_THROWS_AS(run_command({}), usage_error);
    CHECK_THROWS_AS(run_command({"bogus"}), usage_error);
    CHECK_THROWS_AS(run_command({"swan", "--group", "2"}), usage_error);
    CHECK_THROWS_AS(run_command({"vp", "--field", "x", "--p", "7"}), usage_error);
    CHECK_THROWS_AS(run_command({"--help"}), help_requested);
    try {
        run_command({"--help"});
    } catch (const help_requested& h) {
        CHECK(h.text.find("stickelberger") != std::string::npos);
        CHECK(h.text.find("verify-all") != std::string::npos);
    }
    // malformed numeric lists are usage errors too
    CHECK_THROWS_AS(run_command({"stickelberger", "--group", "3;4"}), usage_error);
    CHECK_THROWS_AS(run_command({"chevalley", "--r", "1", "--e", "2,,3"}), usage_error);
}

TEST_CASE("results serialize with outputs only on success") {
    CommandResult ok = run_command({"stickelberger", "--group", "4"});
    json j = ok.to_json();
    CHECK(j["status"] == "ok");
    CHECK(j.contains("outputs"));
    CHECK(!j.contains("message"));
    CHECK(j["inputs"]["group"] == "4");
    CommandResult bad = run_command({"vp", "--field", "1", "--p", "7"});
    json jb = bad.to_json();
    CHECK(jb["status"] == "domain_error");
    CHECK(!jb.contains("outputs"));
    CHECK(jb.contains("message"));
    // the global pretty flag parses from anywhere in the argument list
    CHECK(run_command({"--pretty", "stickelberger", "--group", "3"}).status == "ok");
    CHECK(run_command({"stickelberger", "--group", "3", "--pretty"}).status == "ok");
}
