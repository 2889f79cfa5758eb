#pragma once

#include <nlohmann/json.hpp>

#include <string>

namespace soficlab {

enum class Verdict { Yes, No, Unknown };

const char* to_string(Verdict v);

struct Verdict3 {
    Verdict verdict = Verdict::Unknown;
    nlohmann::json witness;     // present for NO
    nlohmann::json certificate; // present for YES when the claim quantifies over all n
    int checked_up_to = 0;
    std::string note;

    static Verdict3 yes(nlohmann::json certificate = {}, int checked = 0);
    static Verdict3 no(nlohmann::json witness, int checked = 0);
    static Verdict3 unknown(std::string note, int checked = 0);

    nlohmann::json to_json() const;
};

} // namespace soficlab
