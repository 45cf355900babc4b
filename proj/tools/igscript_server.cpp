#include "igscript/service.hpp"

#include <httplib.h>

#include <csignal>
#include <iostream>
#include <thread>

int main() {
    const auto config = igscript::ServiceConfig::from_env();

    // Route SIGINT/SIGTERM to a waiter thread so stop() runs outside a handler.
    sigset_t signals;
    sigemptyset(&signals);
    sigaddset(&signals, SIGINT);
    sigaddset(&signals, SIGTERM);
    pthread_sigmask(SIG_BLOCK, &signals, nullptr);

    httplib::Server server;
    igscript::configure(server, config);

    std::thread waiter([&] {
        int sig = 0;
        sigwait(&signals, &sig);
        server.stop();
    });
    waiter.detach();

    std::cerr << "igscript " << igscript::version() << " listening on port " << config.port << "\n";
    if (!server.listen("0.0.0.0", config.port)) {
        std::cerr << "cannot listen on port " << config.port << "\n";
        return 1;
    }
    return 0;
}
