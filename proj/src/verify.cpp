#include "enritch/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <thread>

namespace enritch {

namespace {

using io::ordered_json;

struct Item {
  bool ok = true;
  std::vector<std::size_t> counts;  // aligned with the theorem's count names
  ordered_json detail;              // reported for the first failing item
};

std::vector<Category<Elem>> categories_up_to(const FiniteDiagonals& d, std::size_t bound) {
  std::vector<Category<Elem>> out;
  for (std::size_t n = 0; n <= bound; ++n) {
    auto level = enumerate_symmetric_categories(d, n);
    out.insert(out.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
  }
  return out;
}

std::vector<Item> run_items(std::size_t count, std::size_t workers, const std::function<Item(std::size_t)>& work) {
  std::vector<Item> results(count);
  workers = std::max<std::size_t>(1, std::min(workers, count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = work(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          results[i] = work(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

const char* typing_name(Typing t) { return t == Typing::strict ? "strict" : "lax"; }

}  // namespace

std::optional<Theorem> theorem_from_name(std::string_view name) {
  if (name == "t36") return Theorem::t36;
  if (name == "l43") return Theorem::l43;
  if (name == "t44") return Theorem::t44;
  if (name == "t54") return Theorem::t54;
  return std::nullopt;
}

std::string_view theorem_name(Theorem t) {
  switch (t) {
    case Theorem::t36: return "t36";
    case Theorem::l43: return "l43";
    case Theorem::t44: return "t44";
    case Theorem::t54: return "t54";
  }
  return "";
}

std::size_t workers_from_env() {
  const char* value = std::getenv("ENRITCH_WORKERS");
  if (!value || !*value) return 1;
  char* end = nullptr;
  const unsigned long n = std::strtoul(value, &end, 10);
  if (*end != '\0' || n == 0) throw SchemaError("ENRITCH_WORKERS must be a positive integer");
  return n;
}

ChainOutcome theorem36_chain(const FiniteDiagonals& d, const Category<Elem>& z,
                             const std::vector<Category<Elem>>& sources, Typing typing) {
  ChainOutcome out;
  auto hyper = is_hypercomplete(d, z, typing);
  out.hypercomplete = hyper.hypercomplete;

  out.retracts = true;
  for (const auto& y : one_point_extensions(d, z)) {
    if (!find_one_point_retraction(d, z, y)) {
      out.retracts = false;
      break;
    }
  }
  if (hyper.witness) {
    out.witness_extension_ok = !find_one_point_retraction(d, z, witness_extension(d, z, *hyper.witness));
  }

  out.extends = true;
  for (const auto& y : sources) {
    if (y.size() > z.size() + 1) continue;
    for (std::size_t k = 0; k < y.size() && out.extends; ++k) {
      std::vector<std::size_t> prefix(k);
      for (std::size_t i = 0; i < k; ++i) prefix[i] = i;
      auto x = full_subcategory(d, y, prefix);
      Functor g{prefix};
      for (const auto& f : enumerate_functors(d, x, z)) {
        ++out.extension_problems;
        auto ext = extend_along(d, x, y, z, f, g);
        if (!ext.h) {
          out.extends = false;
          break;
        }
        if (ext.constructive) ++out.constructive;
      }
    }
    if (!out.extends) break;
  }
  return out;
}

VerifyResult run_verify(Theorem theorem, const FiniteDiagonals& d, const VerifyOptions& options) {
  if (options.bound > verify_max_bound) {
    throw BoundExceeded("bound " + std::to_string(options.bound) + " exceeds the maximum " +
                        std::to_string(verify_max_bound));
  }
  const auto categories = categories_up_to(d, options.bound);
  std::vector<std::string> count_names;
  std::function<Item(std::size_t)> work;

  switch (theorem) {
    case Theorem::t36: {
      auto sources = std::make_shared<std::vector<Category<Elem>>>(categories_up_to(d, options.bound + 1));
      count_names = {"categories", "hypercomplete", "extension_problems", "constructive_extensions", "discrepancies"};
      work = [&d, &categories, sources, &options](std::size_t i) {
        const auto& z = categories[i];
        auto chain = theorem36_chain(d, z, *sources, options.typing);
        Item item;
        item.ok = chain.consistent();
        item.counts = {1, chain.hypercomplete ? 1u : 0u, chain.extension_problems, chain.constructive,
                       item.ok ? 0u : 1u};
        item.detail["category"] = io::category_to_json(d, z);
        item.detail["hypercomplete"] = chain.hypercomplete;
        item.detail["retracts"] = chain.retracts;
        item.detail["extends"] = chain.extends;
        item.detail["witness_extension_ok"] = chain.witness_extension_ok;
        return item;
      };
      break;
    }
    case Theorem::l43: {
      count_names = {"categories", "tight_span_objects", "failures"};
      work = [&d, &categories, &options](std::size_t i) {
        const auto& x = categories[i];
        auto tx = enumerate_TX(d, x);
        auto hyper = is_hypercomplete(d, tx.category, options.typing);
        Item item;
        item.ok = hyper.hypercomplete;
        item.counts = {1, tx.members.size(), item.ok ? 0u : 1u};
        item.detail["category"] = io::category_to_json(d, x);
        item.detail["tight_span"] = io::category_to_json(d, tx.category);
        if (hyper.witness) item.detail["column"] = io::presheaf_to_json(d, *hyper.witness, tx.category);
        return item;
      };
      break;
    }
    case Theorem::t44: {
      count_names = {"categories", "tight_span_objects", "essential_search_nodes", "failures"};
      work = [&d, &categories, &options](std::size_t i) {
        const auto& x = categories[i];
        auto tx = enumerate_TX(d, x);
        auto y = yoneda_functor(d, x, tx);
        const bool ff = is_fully_faithful(d, x, tx.category, y);
        const bool dense = is_dense(d, x, tx.category, y);
        auto essential = is_essential_bruteforce(d, x, tx.category, y);
        const bool hyper = is_hypercomplete(d, tx.category, options.typing).hypercomplete;
        bool maximal = true;
        for (const auto& mu : enumerate_LX(d, x)) {
          for (const auto& lambda : tx.members) {
            if (!(mu.type == lambda.type) || mu == lambda) continue;
            bool above = true;
            for (std::size_t k = 0; k < x.size() && above; ++k) above = d.leq(lambda.values[k], mu.values[k]);
            if (above) maximal = false;
          }
        }
        Item item;
        item.ok = ff && dense && essential.essential && hyper && maximal;
        item.counts = {1, tx.members.size(), essential.nodes, item.ok ? 0u : 1u};
        item.detail["category"] = io::category_to_json(d, x);
        item.detail["fully_faithful"] = ff;
        item.detail["dense"] = dense;
        item.detail["essential"] = essential.essential;
        item.detail["tight_span_hypercomplete"] = hyper;
        item.detail["maximal"] = maximal;
        return item;
      };
      break;
    }
    case Theorem::t54: {
      count_names = {"categories", "fully_faithful_functors", "dense", "discrepancies"};
      work = [&d, &categories](std::size_t i) {
        const auto& x = categories[i];
        Item item;
        item.counts = {1, 0, 0, 0};
        for (const auto& y : categories) {
          for (const auto& f : enumerate_functors(d, x, y)) {
            if (!is_fully_faithful(d, x, y, f)) continue;
            ++item.counts[1];
            const bool dense = is_dense(d, x, y, f);
            const bool codense = is_codense(d, x, y, f);
            const bool essential = is_essential_bruteforce(d, x, y, f).essential;
            if (dense) ++item.counts[2];
            if (dense != codense || dense != essential) {
              ++item.counts[3];
              if (item.ok) {
                item.ok = false;
                item.detail["domain"] = io::category_to_json(d, x);
                item.detail["codomain"] = io::category_to_json(d, y);
                item.detail["functor"] = io::functor_to_json(f, x.set().names, y.set().names);
                item.detail["dense"] = dense;
                item.detail["codense"] = codense;
                item.detail["essential"] = essential;
              }
            }
          }
        }
        return item;
      };
      break;
    }
  }

  auto items = run_items(categories.size(), options.workers, work);

  VerifyResult result;
  std::vector<std::size_t> totals(count_names.size(), 0);
  std::optional<std::size_t> first_failure;
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t k = 0; k < totals.size(); ++k) totals[k] += items[i].counts[k];
    if (!items[i].ok && !first_failure) first_failure = i;
  }
  result.passed = !first_failure;

  ordered_json& report = result.report;
  report["theorem"] = std::string(theorem_name(theorem));
  report["quantale"] = d.quantale().tables().elements;
  report["bound"] = options.bound;
  report["typing"] = typing_name(options.typing);
  report["counts"] = ordered_json::object();
  for (std::size_t k = 0; k < totals.size(); ++k) report["counts"][count_names[k]] = totals[k];
  report["passed"] = result.passed;
  if (first_failure) {
    ordered_json witness = items[*first_failure].detail;
    witness["index"] = *first_failure;
    report["first_counterexample"] = std::move(witness);
  } else {
    report["first_counterexample"] = nullptr;
  }
  return result;
}

}  // namespace enritch
