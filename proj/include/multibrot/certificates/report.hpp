#pragma once

// Certificate reports: an ordered list of steps, each with the claim it
// checks, how, on what inputs, the verdict and a witness. Steps marked
// "trusted" restate a cited fact that is not recomputed here.

#include "multibrot/exact/json.hpp"

#include <string>
#include <utility>
#include <vector>

namespace multibrot::certificates {

using exact::Json;

constexpr int report_version = 1;

struct Step {
    std::string id;
    std::string claim;
    std::string method;
    Json inputs = Json::object();
    bool pass = false;
    Json witness = Json::object();
    bool trusted = false;

    Json to_json() const {
        return Json{{"id", id},
                    {"claim", claim},
                    {"method", method},
                    {"inputs", inputs},
                    {"verdict", pass ? "pass" : "fail"},
                    {"basis", trusted ? "trusted" : "computed"},
                    {"witness", witness}};
    }
};

class CertificateReport {
public:
    explicit CertificateReport(std::string theorem, Json parameters = Json::object())
        : theorem_(std::move(theorem)), parameters_(std::move(parameters)) {}

    Step& add(Step s) {
        steps_.push_back(std::move(s));
        return steps_.back();
    }

    /// Append every step of another report, prefixing the ids.
    void absorb(const CertificateReport& other, const std::string& prefix) {
        for (Step s : other.steps_) {
            s.id = prefix + s.id;
            steps_.push_back(std::move(s));
        }
    }

    const std::string& theorem() const { return theorem_; }
    const std::vector<Step>& steps() const { return steps_; }
    Json& result() { return result_; }
    const Json& result() const { return result_; }

    bool pass() const {
        if (steps_.empty()) return false;
        for (const auto& s : steps_)
            if (!s.pass) return false;
        return true;
    }

    const Step* find(const std::string& id) const {
        for (const auto& s : steps_)
            if (s.id == id) return &s;
        return nullptr;
    }

    Json to_json() const {
        Json steps = Json::array();
        for (const auto& s : steps_) steps.push_back(s.to_json());
        return Json{{"theorem", theorem_},
                    {"version", report_version},
                    {"parameters", parameters_},
                    {"steps", steps},
                    {"result", result_},
                    {"verdict", pass() ? "pass" : "fail"}};
    }

private:
    std::string theorem_;
    Json parameters_;
    std::vector<Step> steps_;
    Json result_ = Json::object();
};

}  // namespace multibrot::certificates
