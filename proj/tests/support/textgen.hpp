#pragma once

// Randomized adversarial text generation for matcher equivalence testing,
// plus the 40-keyword dictionary both suites run it against.

#include <random>
#include <string>
#include <vector>

#include "jobgap/skills.hpp"
#include "oracles.hpp"

namespace textgen {

// 20 skills, 40 keywords, heavy on punctuation-bearing and prefix-colliding
// names. Excluded tokens C, R, Go, Chef, Flow, Julia are absent by design.
inline jobgap::SkillDictionary tricky_dictionary() {
    using jobgap::SkillEntry;
    std::vector<SkillEntry> entries = {
        {"Java", "lang", {"Java"}},
        {"JavaScript", "lang", {"JavaScript", "ECMAScript"}},
        {"TypeScript", "lang", {"TypeScript"}},
        {"C++", "lang", {"C++"}},
        {"C#", "lang", {"C#", "C-sharp"}},
        {"F#", "lang", {"F#"}},
        {"Python", "lang", {"Python", "Python3"}},
        {"SQL", "lang", {"SQL", "MySQL", "PostgreSQL"}},
        {"HTML/CSS", "lang", {"HTML", "HTML5", "CSS", "CSS3"}},
        {"PHP", "lang", {"PHP", "PHP8"}},
        {".NET Framework", "framework", {".NET", "dotnet"}},
        {"ASP.NET", "framework", {"ASP.NET"}},
        {"Node.js", "framework", {"Node.js", "NodeJS", "Node js"}},
        {"React.js", "framework", {"React.js", "ReactJS"}},
        {"Angular", "framework", {"Angular", "AngularJS"}},
        {"Spring", "framework", {"Spring", "Spring Boot"}},
        {"Docker", "tool", {"Docker", "docker-compose"}},
        {"Kubernetes", "tool", {"Kubernetes", "K8s"}},
        {"Git", "tool", {"Git", "GitHub", "GitLab"}},
        {"Go-lang", "lang", {"Golang", "Go lang"}},
    };
    std::vector<std::string> excluded = {"C", "R", "Go", "Chef", "Flow", "Julia"};
    return jobgap::SkillDictionary::from_entries(std::move(entries), std::move(excluded));
}

inline std::vector<oracle::DictEntry> as_oracle_dict(const jobgap::SkillDictionary& d) {
    std::vector<oracle::DictEntry> out;
    for (const auto& entry : d.entries()) out.push_back({entry.skill, entry.keywords});
    return out;
}

// Tokens picked to create near-misses: keywords embedded in longer
// identifiers, case variants, bare excluded names, punctuation neighbors.
inline const std::vector<std::string>& token_pool() {
    static const std::vector<std::string> pool = {
        "Java",       "java",      "JAVA",        "JavaScript", "javascripting",
        "Javan",      "TypeScript", "C++",        "c++",        "C+",
        "C#",         "c#",        "F#",          "#C",         "C",
        "R",          "Go",        "go",          "Golang",     "Chef",
        "Flow",       "Julia",     "Python",      "Python3",    "python2",
        "SQL",        "MySQL",     "NoSQL",       "PostgreSQL", "HTML",
        "HTML5",      "XHTML",     "CSS",         "CSS3",       ".NET",
        "ASP.NET",    "dotnet",    "Node.js",     "Node",       "NodeJS",
        "node.jsx",   "React.js",  "ReactJS",     "Angular",    "AngularJS",
        "Spring",     "springs",   "Docker",      "dockerize",  "Kubernetes",
        "K8s",        "Git",       "GitHub",      "GitLab",     "digit",
        "och",        "med",       "erfarenhet",  "utvecklare", "söker",
        "kunskap",    "團隊",      "krävs",       "3",          "42",
    };
    return pool;
}

inline std::string random_text(std::mt19937& rng) {
    const auto& pool = token_pool();
    static const std::vector<std::string> seps = {" ",  ", ", ". ", " (", ") ",
                                                  "/",  "-",  "\n", "",   "; ",
                                                  ": ", "+",  "#",  ".",  "!"};
    std::uniform_int_distribution<std::size_t> tok(0, pool.size() - 1);
    std::uniform_int_distribution<std::size_t> sep(0, seps.size() - 1);
    std::uniform_int_distribution<int> len(0, 24);

    std::string text;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) {
        text += pool[tok(rng)];
        text += seps[sep(rng)];
    }
    return text;
}

} // namespace textgen
