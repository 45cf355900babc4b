#include "igscript/tree.hpp"

#include <algorithm>

namespace igscript {

namespace {

struct Features {
    bool nesting = false;
    bool annotations = false;
};

void scan(const StatementTree& tree, Features& f);

void scan(const Combination& comb, Features& f) {
    for (const auto& child : comb.children) {
        if (const auto* c = std::get_if<Box<Component>>(&child)) {
            f.nesting = true;
            if ((*c)->annotation) f.annotations = true;
            if ((*c)->is_nested_statement()) scan((*c)->nested_statement(), f);
            if ((*c)->is_nested_combination()) scan((*c)->nested_combination(), f);
        } else if (const auto* s = std::get_if<Box<StatementTree>>(&child)) {
            f.nesting = true;
            scan(**s, f);
        }
    }
}

void scan(const StatementTree& tree, Features& f) {
    for (const auto& el : tree.elements) {
        if (const auto* c = std::get_if<Component>(&el)) {
            if (c->annotation) f.annotations = true;
            if (c->is_nested_statement()) {
                f.nesting = true;
                scan(c->nested_statement(), f);
            } else if (c->is_nested_combination()) {
                f.nesting = true;
                scan(c->nested_combination(), f);
            }
        } else if (const auto* comb = std::get_if<Combination>(&el)) {
            f.nesting = true;
            scan(*comb, f);
        } else if (std::holds_alternative<Annotation>(el)) {
            f.annotations = true;
        }
    }
}

std::size_t count(const StatementTree& tree);

std::size_t count(const Combination& comb) {
    std::size_t n = 0;
    for (const auto& child : comb.children) {
        if (const auto* c = std::get_if<Box<Component>>(&child)) {
            n += 1;
            if ((*c)->is_nested_statement()) n += count((*c)->nested_statement());
            if ((*c)->is_nested_combination()) n += count((*c)->nested_combination());
        } else if (const auto* s = std::get_if<Box<StatementTree>>(&child)) {
            n += count(**s);
        }
    }
    return n;
}

std::size_t count(const StatementTree& tree) {
    std::size_t n = 0;
    for (const auto& el : tree.elements) {
        if (const auto* c = std::get_if<Component>(&el)) {
            n += 1;
            if (c->is_nested_statement()) n += count(c->nested_statement());
            if (c->is_nested_combination()) n += count(c->nested_combination());
        } else if (const auto* comb = std::get_if<Combination>(&el)) {
            n += count(*comb);
        }
    }
    return n;
}

}  // namespace

Level detect_level(const StatementTree& tree) {
    Features f;
    scan(tree, f);
    if (f.annotations) return Level::Logico;
    if (f.nesting) return Level::Extended;
    return Level::Core;
}

std::size_t count_components(const StatementTree& tree) { return count(tree); }

}  // namespace igscript
