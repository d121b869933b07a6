#include "hopfgal/report.hpp"

#include <cstdint>
#include <sstream>

namespace hopfgal {

std::string fnv1a_hex(const std::string &data)
{
	uint64_t h = 14695981039346656037ull;
	for (unsigned char c : data)
	{
		h ^= c;
		h *= 1099511628211ull;
	}
	std::ostringstream ss;
	ss << std::hex;
	for (int i = 15; i >= 0; --i)
		ss << "0123456789abcdef"[(h >> (4 * i)) & 0xf];
	return ss.str();
}

nlohmann::json qresult_json(const QResult &r)
{
	nlohmann::json j;
	j["label"] = r.label;
	j["multidegree"] = r.multidegree;
	j["zero"] = r.zero;
	j["value"] = r.value.str();
	j["note"] = r.note;
	return j;
}

nlohmann::json verdict_json(const Verdict &v)
{
	nlohmann::json j;
	j["status"] = status_str(v.status);
	j["decomposition"] = v.decomposition;
	j["notes"] = v.notes;
	j["witnesses"] = nlohmann::json::array();
	for (auto &w : v.witnesses)
		j["witnesses"].push_back(qresult_json(w));
	return j;
}

nlohmann::json report_json(const std::string &command,
                           const std::string &input, nlohmann::json payload,
                           double elapsed_ms)
{
	nlohmann::json j;
	j["schema_version"] = report_schema_version;
	j["tool"] = {{"name", "hopfgal"}, {"version", tool_version}};
	j["command"] = command;
	j["input_digest"] = fnv1a_hex(input);
	j["result"] = std::move(payload);
	j["elapsed_ms"] = elapsed_ms;
	return j;
}

} // namespace hopfgal
