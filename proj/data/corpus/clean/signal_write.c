#include <signal.h>
#include <unistd.h>

void handler(int sig)
{
    write(2, "interrupted\n", 12);
    _exit(sig);
}

int main(void)
{
    signal(SIGINT, handler);
    pause();
    return 0;
}
