#include <signal.h>
#include <stdlib.h>
#include <syslog.h>
#include <unistd.h>

void handler(int sig)
{
    syslog(LOG_NOTICE, "caught signal %d", sig);
    exit(0);
}

int main(void)
{
    signal(SIGINT, handler);
    for (;;)
        pause();
    return 0;
}
