#include <pwd.h>
#include <stdio.h>
#include <sys/types.h>

int main(void)
{
    char buf[256];
    if (getpw(getuid(), buf) == 0)
        printf("%s\n", buf);
    return 0;
}
