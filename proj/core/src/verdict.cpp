#include "soficlab/verdict.hpp"

namespace soficlab {

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::Yes: return "YES";
    case Verdict::No: return "NO";
    case Verdict::Unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

Verdict3 Verdict3::yes(nlohmann::json certificate, int checked) {
    Verdict3 v;
    v.verdict = Verdict::Yes;
    v.certificate = std::move(certificate);
    v.checked_up_to = checked;
    return v;
}

Verdict3 Verdict3::no(nlohmann::json witness, int checked) {
    Verdict3 v;
    v.verdict = Verdict::No;
    v.witness = std::move(witness);
    v.checked_up_to = checked;
    return v;
}

Verdict3 Verdict3::unknown(std::string note, int checked) {
    Verdict3 v;
    v.note = std::move(note);
    v.checked_up_to = checked;
    return v;
}

nlohmann::json Verdict3::to_json() const {
    nlohmann::json j;
    j["verdict"] = to_string(verdict);
    j["witness"] = witness;
    j["certificate"] = certificate;
    j["checked_up_to"] = checked_up_to;
    if (!note.empty()) j["note"] = note;
    return j;
}

} // namespace soficlab
