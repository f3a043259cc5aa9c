#include <pwd.h>
#include <stdio.h>
#include <unistd.h>

int main(void)
{
    struct passwd *pw = getpwuid(getuid());
    if (pw != NULL)
        puts(pw->pw_name);
    return 0;
}
