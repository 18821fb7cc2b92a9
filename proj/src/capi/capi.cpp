#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "tpsgeo/app/commands.hpp"
#include "tpsgeo/errors.hpp"
#include "tpsgeo/exactalg/json_io.hpp"
#include "tpsgeo/heisenberg/heisenberg.hpp"
#include "tpsgeo/tpsgeo.h"

using nlohmann::json;
using namespace tpsgeo;

struct tpsgeo_report {
  report::Envelope envelope;
};

struct tpsgeo_heis {
  heisenberg::HeisElement element;
};

namespace {

thread_local std::string last_error;

tpsgeo_status fail(tpsgeo_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class F>
tpsgeo_status guarded(F f) {
  last_error.clear();
  try {
    return f();
  } catch (const InputError& e) {
    return fail(TPSGEO_USAGE_ERROR, e.what());
  } catch (const json::exception& e) {
    return fail(TPSGEO_USAGE_ERROR, std::string("malformed JSON: ") + e.what());
  } catch (const DomainError& e) {
    return fail(TPSGEO_DOMAIN_ERROR, e.what());
  } catch (const NumericDomainError& e) {
    return fail(TPSGEO_DOMAIN_ERROR, e.what());
  } catch (const std::exception& e) {
    return fail(TPSGEO_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(TPSGEO_INTERNAL_ERROR, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

tpsgeo_status emit(report::Envelope e, tpsgeo_report** out) {
  bool ok = e.all_passed();
  *out = new tpsgeo_report{std::move(e)};
  return ok ? TPSGEO_OK : TPSGEO_VERIFY_FAILED;
}

void need(const void* p, const char* what) {
  if (!p) throw InputError(std::string(what) + " must not be null");
}

json parse(const char* text, const char* what) {
  need(text, what);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

std::vector<std::string> split(const char* list) {
  std::vector<std::string> out;
  if (!list) return out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

extern "C" {

const char* tpsgeo_version(void) { return report::tool_version(); }

const char* tpsgeo_last_error(void) { return last_error.c_str(); }

void tpsgeo_string_free(char* s) { std::free(s); }

tpsgeo_status tpsgeo_curvature(const char* space, int n, tpsgeo_report** out) {
  return guarded([&] {
    need(space, "space");
    need(out, "out");
    return emit(app::curvature(app::space_from_name(space), n), out);
  });
}

tpsgeo_status tpsgeo_killing(const char* space, int n, int degree, tpsgeo_report** out) {
  return guarded([&] {
    need(space, "space");
    need(out, "out");
    return emit(app::killing(app::space_from_name(space), n, degree), out);
  });
}

tpsgeo_status tpsgeo_potential(const char* model_json, const char* points_json, tpsgeo_report** out) {
  return guarded([&] {
    need(out, "out");
    return emit(app::potential(parse(model_json, "model file"), parse(points_json, "points")), out);
  });
}

tpsgeo_status tpsgeo_verify_all(int n_max, const char* only, int tamper, int samples, unsigned long seed,
                                tpsgeo_report** out) {
  return guarded([&] {
    need(out, "out");
    app::VerifyOptions o;
    o.n_max = n_max;
    o.only = split(only);
    o.tamper = tamper != 0;
    o.samples = samples;
    if (seed != 0) o.seed = seed;
    return emit(app::verify_all(o), out);
  });
}

int tpsgeo_report_passed(const tpsgeo_report* r) { return r && r->envelope.all_passed() ? 1 : 0; }

size_t tpsgeo_report_count(const tpsgeo_report* r) { return r ? r->envelope.results.size() : 0; }

size_t tpsgeo_report_failures(const tpsgeo_report* r) { return r ? r->envelope.count(report::Status::fail) : 0; }

tpsgeo_status tpsgeo_report_json(const tpsgeo_report* r, int include_timing, int indent, char** out) {
  return guarded([&] {
    need(r, "report");
    need(out, "out");
    *out = copy_string(report::to_json(r->envelope, include_timing != 0).dump(indent < 0 ? -1 : indent));
    return TPSGEO_OK;
  });
}

tpsgeo_status tpsgeo_report_markdown(const tpsgeo_report* r, char** out) {
  return guarded([&] {
    need(r, "report");
    need(out, "out");
    *out = copy_string(report::to_markdown(r->envelope));
    return TPSGEO_OK;
  });
}

void tpsgeo_report_free(tpsgeo_report* r) { delete r; }

tpsgeo_status tpsgeo_heis_from_json(const char* text, tpsgeo_heis** out) {
  return guarded([&] {
    need(out, "out");
    *out = new tpsgeo_heis{heisenberg::element_from_json(parse(text, "element"))};
    return TPSGEO_OK;
  });
}

tpsgeo_status tpsgeo_heis_multiply(const tpsgeo_heis* g, const tpsgeo_heis* h, tpsgeo_heis** out) {
  return guarded([&] {
    need(g, "g");
    need(h, "h");
    need(out, "out");
    *out = new tpsgeo_heis{heisenberg::multiply(g->element, h->element)};
    return TPSGEO_OK;
  });
}

tpsgeo_status tpsgeo_heis_inverse(const tpsgeo_heis* g, tpsgeo_heis** out) {
  return guarded([&] {
    need(g, "g");
    need(out, "out");
    *out = new tpsgeo_heis{heisenberg::inverse(g->element)};
    return TPSGEO_OK;
  });
}

tpsgeo_status tpsgeo_heis_chi(const tpsgeo_heis* g, char** out) {
  return guarded([&] {
    need(g, "g");
    need(out, "out");
    json pt = json::array();
    for (const auto& r : heisenberg::chi(g->element)) pt.push_back(exactalg::to_json(r));
    *out = copy_string(pt.dump());
    return TPSGEO_OK;
  });
}

tpsgeo_status tpsgeo_heis_to_json(const tpsgeo_heis* g, char** out) {
  return guarded([&] {
    need(g, "g");
    need(out, "out");
    *out = copy_string(heisenberg::to_json(g->element).dump());
    return TPSGEO_OK;
  });
}

void tpsgeo_heis_free(tpsgeo_heis* g) { delete g; }

}  // extern "C"
