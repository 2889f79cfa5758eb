#pragma once

#include <soficlab/io.hpp>
#include <soficlab/shift.hpp>

#include <string>

namespace fixtures {

inline std::string path(const std::string& name) { return std::string(SOFICLAB_CORPUS_DIR) + "/" + name + ".json"; }
inline soficlab::LabeledGraph graph(const std::string& name) { return soficlab::load_presentation(path(name)); }
inline soficlab::ShiftHandle shift(const std::string& name) { return soficlab::ShiftHandle::from_graph(graph(name)); }
inline soficlab::Word word(const soficlab::ShiftHandle& y, const std::string& text) {
    return soficlab::parse_word(y.alphabet(), text);
}

} // namespace fixtures
