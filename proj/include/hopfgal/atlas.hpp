#pragma once

// Built-in catalog of worked examples with their expected verdicts.

#include "hopfgal/classifier.hpp"

#include <functional>

namespace hopfgal {

struct AtlasEntry {
	std::string name;
	std::string description;
	Status expected = Status::GT;
	std::function<HopfDatum()> build;
	// verdict procedure; defaults to classify()
	std::function<Verdict(const HopfDatum &)> decide;
};

const std::vector<AtlasEntry> &atlas_entries();

// nullptr when absent
const AtlasEntry *atlas_find(const std::string &name);

} // namespace hopfgal
