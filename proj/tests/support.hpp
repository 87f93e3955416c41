#pragma once

#include <filesystem>
#include <random>
#include <string>

#include "denominal/inventory.hpp"

namespace test_support {

inline std::filesystem::path data_dir() { return DENOMINAL_DATA_DIR; }
inline std::filesystem::path fixture_dir() { return DENOMINAL_FIXTURE_DIR; }

inline const denominal::TemplateInventory& translit() {
    static const auto inv = denominal::TemplateInventory::load(data_dir() / "translit.tsv");
    return inv;
}

inline const denominal::TemplateInventory& hebrew() {
    static const auto inv = denominal::TemplateInventory::load(data_dir() / "hebrew.tsv");
    return inv;
}

inline denominal::Root random_root(const denominal::Alphabet& alphabet, int arity, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.letters().size() - 1);
    std::vector<std::string> c;
    for (int i = 0; i < arity; ++i) c.push_back(alphabet.letters()[pick(rng)]);
    return denominal::Root(std::move(c));
}

/// A fresh scratch directory under the build tree, emptied on creation.
inline std::filesystem::path scratch_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("denominal_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace test_support
