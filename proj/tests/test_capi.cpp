// Copyright 2026 The fcspec authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cstring>
#include <fstream>
#include <string>

#include "fcspec.h"

namespace {

struct Out {
    char* text = nullptr;
    char* error = nullptr;
    ~Out() {
        fcspec_string_free(text);
        fcspec_string_free(error);
    }
};

}  // namespace

TEST_CASE("version string") {
    CHECK(std::string(fcspec_version()).find("fcspec") == 0);
}

TEST_CASE("open, report and free through the C surface") {
    fcspec_options opts = fcspec_options_default();
    fcspec_module* m = nullptr;
    Out open_err;
    REQUIRE(fcspec_module_open("catalog:Z4", &opts, &m, &open_err.error) == FCSPEC_OK);
    REQUIRE(m != nullptr);
    CHECK(std::string(fcspec_module_name(m)) == "Z4");

    Out spec;
    CHECK(fcspec_report_spec(m, &opts, &spec.text, &spec.error) == FCSPEC_OK);
    CHECK(std::string(spec.text).find("schema: fcspec-report/1") == 0);

    Out topo;
    CHECK(fcspec_report_topology(m, &opts, &topo.text, &topo.error) == FCSPEC_OK);
    CHECK(std::string(topo.text).find("space: all-submodules") != std::string::npos);

    Out verify;
    int falsified = -1;
    CHECK(fcspec_report_verify(m, nullptr, &opts, &verify.text, &falsified, &verify.error) ==
          FCSPEC_OK);
    CHECK(falsified == 0);

    Out dot;
    CHECK(fcspec_export_dot(m, &opts, &dot.text, &dot.error) == FCSPEC_OK);
    CHECK(std::string(dot.text).find("digraph spectrum") == 0);

    Out ser;
    CHECK(fcspec_module_serialize(m, &ser.text, &ser.error) == FCSPEC_OK);
    CHECK(std::string(ser.text).find("\"name\": \"Z4\"") != std::string::npos);

    fcspec_module_free(m);
}

TEST_CASE("the fully-invariant topology flag reaches the engine") {
    fcspec_options opts = fcspec_options_default();
    opts.fully_invariant = 1;
    fcspec_module* m = nullptr;
    Out err;
    REQUIRE(fcspec_module_open("catalog:V4overF2", &opts, &m, &err.error) == FCSPEC_OK);
    Out topo;
    CHECK(fcspec_report_topology(m, &opts, &topo.text, &topo.error) == FCSPEC_OK);
    CHECK(std::string(topo.text).find("space: fully-invariant") != std::string::npos);
    fcspec_module_free(m);
}

TEST_CASE("status codes distinguish validation from bounds") {
    fcspec_options opts = fcspec_options_default();
    fcspec_module* m = nullptr;
    Out bad;
    CHECK(fcspec_module_open("catalog:missing", &opts, &m, &bad.error) == FCSPEC_ERR_VALIDATION);
    CHECK(bad.error != nullptr);

    opts.bound_elements = 2;
    Out bounds;
    CHECK(fcspec_module_open("catalog:Z4", &opts, &m, &bounds.error) == FCSPEC_ERR_BOUNDS);

    Out null_err;
    CHECK(fcspec_module_open(nullptr, &opts, nullptr, &null_err.error) == FCSPEC_ERR_VALIDATION);
}

TEST_CASE("file loading through the C surface") {
    const char* path = "capi_roundtrip.json";
    {
        fcspec_options opts = fcspec_options_default();
        fcspec_module* m = nullptr;
        Out err;
        REQUIRE(fcspec_module_open("catalog:Z2xZ3", &opts, &m, &err.error) == FCSPEC_OK);
        Out ser;
        REQUIRE(fcspec_module_serialize(m, &ser.text, &ser.error) == FCSPEC_OK);
        std::ofstream out(path, std::ios::binary);
        out << ser.text;
        fcspec_module_free(m);
    }
    fcspec_options opts = fcspec_options_default();
    fcspec_module* m = nullptr;
    Out err;
    REQUIRE(fcspec_module_open(path, &opts, &m, &err.error) == FCSPEC_OK);
    CHECK(std::string(fcspec_module_name(m)) == "Z2xZ3");
    fcspec_module_free(m);
}

TEST_CASE("catalog and fuzz through the C surface") {
    fcspec_options opts = fcspec_options_default();
    Out cat;
    CHECK(fcspec_catalog_list(&opts, &cat.text, &cat.error) == FCSPEC_OK);
    CHECK(std::string(cat.text).find("Z6scrambled") != std::string::npos);

    Out fz;
    int falsified = -1;
    CHECK(fcspec_fuzz(3, 4, 16, &opts, &fz.text, &falsified, &fz.error) == FCSPEC_OK);
    CHECK(falsified == 0);
    CHECK(std::string(fz.text).find("summary: modules 4") != std::string::npos);

    Out bad;
    CHECK(fcspec_fuzz(3, -1, 16, &opts, &bad.text, &falsified, &bad.error) ==
          FCSPEC_ERR_VALIDATION);

    Out all;
    CHECK(fcspec_report_verify_catalog(&opts, &all.text, &falsified, &all.error) == FCSPEC_OK);
    CHECK(falsified == 0);
    CHECK(std::string(all.text).find("total falsified: 0") != std::string::npos);
}

TEST_CASE("unknown theorem ids surface as validation errors") {
    fcspec_options opts = fcspec_options_default();
    fcspec_module* m = nullptr;
    Out err;
    REQUIRE(fcspec_module_open("catalog:Z4", &opts, &m, &err.error) == FCSPEC_OK);
    Out verify;
    int falsified = 0;
    CHECK(fcspec_report_verify(m, "thm-bogus", &opts, &verify.text, &falsified, &verify.error) ==
          FCSPEC_ERR_VALIDATION);
    CHECK(std::string(verify.error).find("unknown theorem id") != std::string::npos);
    fcspec_module_free(m);
}
