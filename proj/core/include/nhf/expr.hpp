#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace nhf {

// Tiny arithmetic expression evaluator: numbers, named variables, + - * / ^,
// parentheses and the usual scalar functions. Compiled once, evaluated many
// times against a value vector indexed by the variable table.
class Expr {
public:
    struct Node;

    static Expr parse(const std::string& text, const std::map<std::string, int>& vars);
    double eval(const std::vector<double>& values) const;

private:
    std::shared_ptr<const Node> root_;
};

} // namespace nhf
