#pragma once

#include "httplib.h"
#include "fordspine/service.hpp"

namespace fordspine {

/// Wires the pure handlers onto an httplib server. Each request runs its own
/// engine; the options are copied into the handlers.
inline void register_routes(httplib::Server& server, ServiceOptions opts) {
  auto reply = [](httplib::Response& res, const HttpResult& r) {
    res.status = r.status;
    res.set_content(r.body, r.content_type.c_str());
  };
  server.Post("/api/compute", [opts, reply](const httplib::Request& req, httplib::Response& res) { reply(res, handle_compute(req.body, opts)); });
  server.Post("/api/sweep", [opts, reply](const httplib::Request& req, httplib::Response& res) { reply(res, handle_sweep(req.body, opts)); });
  server.Get("/api/presets", [reply](const httplib::Request&, httplib::Response& res) { reply(res, handle_presets()); });
  server.Get("/api/health", [reply](const httplib::Request&, httplib::Response& res) { reply(res, handle_health()); });
}

}  // namespace fordspine
