#pragma once

// Result of verifying a set of operator relations. Each entry records one
// relation, whether its residual vanished identically, and the size of the
// residual normal form when it did not (zero terms means exact zero).

#include <cstddef>
#include <string>
#include <vector>

namespace mlqm {

struct RelationReport {
    std::string relation;
    bool ok = false;
    std::size_t residualTerms = 0;
    std::string residual; // normal form of the residual when nonzero, else empty
};

struct VerificationReport {
    std::string subject;
    std::vector<RelationReport> relations;

    bool all_ok() const;
    void add(std::string relation, bool ok, std::size_t residualTerms = 0, std::string residual = {});
    void merge(const VerificationReport& other);

    // Deterministic JSON: {"subject":...,"all_ok":...,"relations":[
    //   {"relation":...,"status":"ok"|"fail","residual_terms":N}, ...]}
    std::string to_json() const;
};

std::string json_escape(const std::string& s);

} // namespace mlqm
